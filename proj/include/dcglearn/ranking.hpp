#pragma once

#include <vector>

namespace dcglearn {

// Grades are integers in {1..L}; a larger grade means a better document.

// Per-grade gain values: gains[v-1] is the gain of grade v. The vector is
// compatible when gains strictly increase with the grade.
struct GainVector {
  std::vector<double> gains;

  int levels() const { return static_cast<int>(gains.size()); }
  double at_grade(int grade) const;
};

// Per-position weights, rank 1 first; valid when c1 > c2 > ... > cK > 0.
struct DiscountVector {
  std::vector<double> discounts;

  int positions() const { return static_cast<int>(discounts.size()); }
};

// Grades by rank for the top of some ranking.
using GradeSequence = std::vector<int>;

// Item ids (1-based) by rank.
using Permutation = std::vector<int>;

// N documents with grades in {1..L}; item ids are 1..N.
struct LabeledSet {
  std::vector<int> grades;

  int size() const { return static_cast<int>(grades.size()); }
};

bool is_compatible(const GainVector& g);
bool is_valid_discount(const DiscountVector& c);

// c_k = 1 / log_base(k + 1). Pairwise DCG order does not depend on the base.
DiscountVector log_discounts(int positions, double base = 2.0);

// sum_{i=1..k} c_i * gain(seq[i])
double dcg(const GradeSequence& seq, const GainVector& g, const DiscountVector& c, int k);

// Stable descending sort by grade (ties keep input order). By the
// rearrangement inequality this maximizes DCG for every compatible gain
// vector and valid discount vector.
Permutation optimal_ranking(const LabeledSet& set, const GainVector& g, const DiscountVector& c,
                            int k);

// Top-k grades of a ranking over the set.
GradeSequence grades_of(const LabeledSet& set, const Permutation& ranking, int k);

// gain -> gain^exponent elementwise; requires positive gains and a positive
// exponent. Order preserving, so compatibility is preserved.
GainVector apply_power_transform(const GainVector& g, double exponent);

}  // namespace dcglearn

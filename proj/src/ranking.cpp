#include "dcglearn/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcglearn {

double GainVector::at_grade(int grade) const {
  if (grade < 1 || grade > levels()) {
    throw std::invalid_argument("grade " + std::to_string(grade) + " outside {1.." +
                                std::to_string(levels()) + "}");
  }
  return gains[static_cast<std::size_t>(grade - 1)];
}

bool is_compatible(const GainVector& g) {
  if (g.levels() < 2) return false;
  for (std::size_t i = 1; i < g.gains.size(); ++i) {
    if (!(g.gains[i] > g.gains[i - 1])) return false;
  }
  return true;
}

bool is_valid_discount(const DiscountVector& c) {
  if (c.discounts.empty()) return false;
  if (!(c.discounts.back() > 0.0)) return false;
  for (std::size_t i = 1; i < c.discounts.size(); ++i) {
    if (!(c.discounts[i - 1] > c.discounts[i])) return false;
  }
  return true;
}

DiscountVector log_discounts(int positions, double base) {
  if (positions < 1) throw std::invalid_argument("positions must be >= 1");
  if (!(base > 1.0)) throw std::invalid_argument("log base must be > 1");
  DiscountVector c;
  c.discounts.resize(static_cast<std::size_t>(positions));
  const double denom = std::log(base);
  for (int i = 0; i < positions; ++i) {
    c.discounts[static_cast<std::size_t>(i)] = denom / std::log(static_cast<double>(i + 2));
  }
  return c;
}

double dcg(const GradeSequence& seq, const GainVector& g, const DiscountVector& c, int k) {
  if (seq.size() != c.discounts.size()) {
    throw std::invalid_argument("sequence length " + std::to_string(seq.size()) +
                                " != discount length " + std::to_string(c.discounts.size()));
  }
  if (k < 0 || static_cast<std::size_t>(k) > seq.size()) {
    throw std::invalid_argument("cutoff k out of range");
  }
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    total += c.discounts[static_cast<std::size_t>(i)] * g.at_grade(seq[static_cast<std::size_t>(i)]);
  }
  return total;
}

Permutation optimal_ranking(const LabeledSet& set, const GainVector& g, const DiscountVector& c,
                            int k) {
  if (!is_compatible(g)) throw std::invalid_argument("gain vector is not compatible");
  if (!is_valid_discount(c)) throw std::invalid_argument("discount vector is not valid");
  if (k < 1 || k > set.size()) throw std::invalid_argument("cutoff k out of range");
  for (int grade : set.grades) {
    (void)g.at_grade(grade);
  }
  Permutation ranking(static_cast<std::size_t>(set.size()));
  std::iota(ranking.begin(), ranking.end(), 1);
  std::stable_sort(ranking.begin(), ranking.end(), [&set](int a, int b) {
    return set.grades[static_cast<std::size_t>(a - 1)] > set.grades[static_cast<std::size_t>(b - 1)];
  });
  return ranking;
}

GradeSequence grades_of(const LabeledSet& set, const Permutation& ranking, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > ranking.size()) {
    throw std::invalid_argument("cutoff k out of range");
  }
  GradeSequence seq(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int item = ranking[static_cast<std::size_t>(i)];
    if (item < 1 || item > set.size()) throw std::invalid_argument("item id out of range");
    seq[static_cast<std::size_t>(i)] = set.grades[static_cast<std::size_t>(item - 1)];
  }
  return seq;
}

GainVector apply_power_transform(const GainVector& g, double exponent) {
  if (!(exponent > 0.0)) throw std::domain_error("exponent must be positive");
  GainVector out;
  out.gains.reserve(g.gains.size());
  for (double v : g.gains) {
    if (!(v > 0.0)) throw std::domain_error("power transform requires positive gains");
    out.gains.push_back(std::pow(v, exponent));
  }
  return out;
}

}  // namespace dcglearn

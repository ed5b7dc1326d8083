#include "dcglearn/coherence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcglearn/rng.hpp"

namespace dcglearn {

namespace {

constexpr int kEnumerationGuard = 10;

struct SequenceEntry {
  GradeSequence grades;
  Permutation representative;  // lexicographically smallest realizing ranking
};

// The representative ranking places, for each rank, the lowest-index unused
// item carrying the required grade; leftover items follow in index order.
Permutation representative_for(const LabeledSet& set, const GradeSequence& seq) {
  const int n = set.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Permutation ranking;
  ranking.reserve(static_cast<std::size_t>(n));
  for (int grade : seq) {
    for (int item = 1; item <= n; ++item) {
      if (!used[static_cast<std::size_t>(item - 1)] &&
          set.grades[static_cast<std::size_t>(item - 1)] == grade) {
        used[static_cast<std::size_t>(item - 1)] = true;
        ranking.push_back(item);
        break;
      }
    }
  }
  for (int item = 1; item <= n; ++item) {
    if (!used[static_cast<std::size_t>(item - 1)]) ranking.push_back(item);
  }
  return ranking;
}

// Distinct top-k grade sequences in lexicographic order.
std::vector<SequenceEntry> enumerate_sequences(const LabeledSet& set, int levels, int k) {
  std::vector<int> remaining(static_cast<std::size_t>(levels) + 1, 0);
  for (int grade : set.grades) remaining[static_cast<std::size_t>(grade)]++;

  std::vector<SequenceEntry> out;
  GradeSequence current;
  current.reserve(static_cast<std::size_t>(k));

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      out.push_back({current, representative_for(set, current)});
      return;
    }
    for (int grade = 1; grade <= levels; ++grade) {
      if (remaining[static_cast<std::size_t>(grade)] == 0) continue;
      remaining[static_cast<std::size_t>(grade)]--;
      current.push_back(grade);
      self(self, depth + 1);
      current.pop_back();
      remaining[static_cast<std::size_t>(grade)]++;
    }
  };
  recurse(recurse, 0);
  return out;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

CoherenceVerdict check_coherence(const LabeledSet& set, const GainVector& ga, const GainVector& gb,
                                 const DiscountVector& c, int k) {
  if (set.size() > kEnumerationGuard) {
    throw std::length_error("labeled set too large to enumerate (N <= " +
                            std::to_string(kEnumerationGuard) + ")");
  }
  if (!is_compatible(ga) || !is_compatible(gb)) {
    throw std::invalid_argument("both gain vectors must be compatible");
  }
  if (ga.levels() != gb.levels()) throw std::invalid_argument("gain vectors differ in length");
  if (k < 1 || k > set.size() || k > c.positions()) {
    throw std::invalid_argument("cutoff k out of range");
  }

  const auto entries = enumerate_sequences(set, ga.levels(), k);
  DiscountVector top_c;
  top_c.discounts.assign(c.discounts.begin(), c.discounts.begin() + k);

  std::vector<double> score_a, score_b;
  score_a.reserve(entries.size());
  score_b.reserve(entries.size());
  for (const auto& e : entries) {
    score_a.push_back(dcg(e.grades, ga, top_c, k));
    score_b.push_back(dcg(e.grades, gb, top_c, k));
  }

  CoherenceVerdict verdict;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const int sa = sign_of(score_a[i] - score_a[j]);
      const int sb = sign_of(score_b[i] - score_b[j]);
      if (sa == 0 || sb == 0) continue;  // ties are skipped
      if (sa != sb) {
        const std::size_t first = sa > 0 ? i : j;   // the one A prefers
        const std::size_t second = sa > 0 ? j : i;
        verdict.coherent = false;
        verdict.witness = {entries[first].representative, entries[second].representative};
        verdict.a_pi1 = score_a[first];
        verdict.a_pi2 = score_a[second];
        verdict.b_pi1 = score_b[first];
        verdict.b_pi2 = score_b[second];
        return verdict;
      }
    }
  }
  return verdict;
}

bool verify_binary_coherence(int trials, int n, int k, std::uint64_t seed) {
  if (n > kEnumerationGuard) {
    throw std::length_error("labeled set too large to enumerate");
  }
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");

  Rng rng(seed);
  auto draw_increasing = [&rng](int count, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (;;) {
      for (auto& x : v) x = rng.next_real(lo, hi);
      std::sort(v.begin(), v.end());
      bool strict = true;
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) strict = false;
      }
      if (strict) return v;
    }
  };

  bool all_coherent = true;
  for (int t = 0; t < trials; ++t) {
    GainVector ga{draw_increasing(2, 0.1, 5.0)};
    GainVector gb{draw_increasing(2, 0.1, 5.0)};
    auto decreasing = draw_increasing(k, 0.1, 2.0);
    std::reverse(decreasing.begin(), decreasing.end());
    DiscountVector c{decreasing};
    LabeledSet set;
    set.grades.resize(static_cast<std::size_t>(n));
    for (auto& grade : set.grades) grade = 1 + rng.next_int(2);

    if (!check_coherence(set, ga, gb, c, k).coherent) all_coherent = false;
  }
  return all_coherent;
}

std::optional<double> find_counterexample_exponent(const LabeledSet& set, const GainVector& g,
                                                   const DiscountVector& c, int k, double k_max) {
  if (!is_compatible(g)) throw std::invalid_argument("gain vector is not compatible");
  for (int step = 1; 0.25 * step <= k_max + 1e-12; ++step) {
    const double exponent = 0.25 * step;
    const GainVector transformed = apply_power_transform(g, exponent);
    if (!check_coherence(set, g, transformed, c, k).coherent) return exponent;
  }
  return std::nullopt;
}

}  // namespace dcglearn

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dcglearn/ranking.hpp"

namespace dcglearn {

// Outcome of comparing two DCG parameterizations over one ranking universe.
// When the rankers disagree, `witness` holds a pair of rankings scored in
// opposite order; pi1 is the one ranker A strictly prefers. Pairs where
// either ranker ties are skipped, not counted as disagreements.
struct CoherenceVerdict {
  bool coherent = true;
  std::optional<std::pair<Permutation, Permutation>> witness;
  // DCG values at the witness: {A(pi1), A(pi2), B(pi1), B(pi2)}.
  double a_pi1 = 0.0, a_pi2 = 0.0, b_pi1 = 0.0, b_pi2 = 0.0;
};

// Enumerates every distinct top-k grade sequence realizable by permuting
// the set (duplicate grades collapse the factorial blow-up), compares all
// sequence pairs under both gain vectors, and reports the first strict
// disagreement in lexicographic order. Guarded to N <= 10.
CoherenceVerdict check_coherence(const LabeledSet& set, const GainVector& ga, const GainVector& gb,
                                 const DiscountVector& c, int k);

// Randomized check of the two-level case: draws `trials` instances of two
// compatible binary gain vectors, a valid discount vector and a labeled
// set, and returns true iff no disagreement is ever found.
bool verify_binary_coherence(int trials, int n, int k, std::uint64_t seed);

// Scans exponents 0.25, 0.50, ... up to k_max and returns the smallest one
// for which g and g^exponent score some pair of rankings in opposite
// order, or nullopt if the whole grid is coherent.
std::optional<double> find_counterexample_exponent(const LabeledSet& set, const GainVector& g,
                                                   const DiscountVector& c, int k, double k_max);

}  // namespace dcglearn

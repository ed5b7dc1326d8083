#pragma once

#include <vector>

#include "dcglearn/learner.hpp"

namespace dcglearn {

// Fraction of pairs whose winner scores strictly higher under w_hat.
// Predicted ties count as incorrect.
double precision(const UtilityVector& w_hat, const std::vector<PreferencePair>& test_pairs);

// Subtracts each block's last (worst-grade) weight from the whole block.
// Utility differences between any two one-hot-per-block encodings are
// unchanged, so predicted preferences are too.
UtilityVector t_transform(const UtilityVector& w);

// Cosine of the t-transformed vectors, in [-1, 1].
double similarity(const UtilityVector& w, const UtilityVector& w_hat);

// Number of ranks at which the two rankings place different items.
int hamming(const Permutation& a, const Permutation& b);

}  // namespace dcglearn

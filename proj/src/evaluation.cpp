#include "dcglearn/evaluation.hpp"

#include <cmath>
#include <stdexcept>

#include "dcglearn/errors.hpp"

namespace dcglearn {

double precision(const UtilityVector& w_hat, const std::vector<PreferencePair>& test_pairs) {
  if (test_pairs.empty()) throw std::invalid_argument("empty test set");
  std::size_t correct = 0;
  for (const auto& p : test_pairs) {
    if (utility(w_hat, p.winner) > utility(w_hat, p.loser)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test_pairs.size());
}

UtilityVector t_transform(const UtilityVector& w) {
  if (w.block_size < 1 || w.weights.empty() ||
      w.weights.size() % static_cast<std::size_t>(w.block_size) != 0) {
    throw std::invalid_argument("malformed utility vector");
  }
  UtilityVector out = w;
  const std::size_t block = static_cast<std::size_t>(w.block_size);
  for (std::size_t start = 0; start < out.weights.size(); start += block) {
    const double offset = out.weights[start + block - 1];
    for (std::size_t i = 0; i < block; ++i) out.weights[start + i] -= offset;
  }
  return out;
}

double similarity(const UtilityVector& w, const UtilityVector& w_hat) {
  if (w.weights.size() != w_hat.weights.size() || w.block_size != w_hat.block_size) {
    throw std::invalid_argument("utility vectors differ in shape");
  }
  const UtilityVector tw = t_transform(w);
  const UtilityVector th = t_transform(w_hat);
  double dot = 0.0, nw = 0.0, nh = 0.0;
  for (std::size_t i = 0; i < tw.weights.size(); ++i) {
    dot += tw.weights[i] * th.weights[i];
    nw += tw.weights[i] * tw.weights[i];
    nh += th.weights[i] * th.weights[i];
  }
  if (nw == 0.0 || nh == 0.0) {
    throw DegenerateInputError("transformed utility vector is zero");
  }
  return dot / (std::sqrt(nw) * std::sqrt(nh));
}

int hamming(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations differ in length");
  int distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++distance;
  }
  return distance;
}

}  // namespace dcglearn

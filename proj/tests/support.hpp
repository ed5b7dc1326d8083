#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dcglearn/learner.hpp"

// Reference minimizer for the preference objective, independent of the
// production solver: pattern search over coordinate directions plus all
// contiguous in-block run sums (which positively span the feasible cone's
// tangent directions at any boundary point). Slow, only for tiny dims.
namespace oracle {

inline double objective(const std::vector<double>& w,
                        const std::vector<dcglearn::PreferencePair>& pairs, double c) {
  double f = 0.0;
  for (double v : w) f += v * v;
  for (const auto& p : pairs) {
    double score = p.margin;
    for (std::size_t i = 0; i < w.size(); ++i) {
      score -= w[i] * (static_cast<double>(p.winner.bits[i]) - static_cast<double>(p.loser.bits[i]));
    }
    if (score > 0.0) f += c * score * score;
  }
  return f;
}

inline bool feasible(const std::vector<double>& w, int block_size, bool monotone) {
  if (!monotone) return true;
  for (std::size_t start = 0; start < w.size(); start += static_cast<std::size_t>(block_size)) {
    for (int i = 1; i < block_size; ++i) {
      if (w[start + static_cast<std::size_t>(i)] > w[start + static_cast<std::size_t>(i - 1)])
        return false;
    }
  }
  return true;
}

inline double min_objective(const std::vector<dcglearn::PreferencePair>& pairs, double c,
                            bool monotone) {
  const std::size_t dim = pairs.front().winner.size();
  const int block = pairs.front().winner.block_size;

  // direction = add +-1 over a contiguous in-block index range
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t start = 0; start < dim; start += static_cast<std::size_t>(block)) {
    for (int i = 0; i < block; ++i) {
      for (int j = i; j < block; ++j) {
        ranges.emplace_back(start + static_cast<std::size_t>(i), start + static_cast<std::size_t>(j));
      }
    }
  }

  std::vector<double> w(dim, 0.0);
  double best = objective(w, pairs, c);
  std::vector<double> cand(dim);
  for (double step = 8.0; step > 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& [lo, hi] : ranges) {
        for (double s : {step, -step}) {
          cand = w;
          for (std::size_t i = lo; i <= hi; ++i) cand[i] += s;
          if (!feasible(cand, block, monotone)) continue;
          const double f = objective(cand, pairs, c);
          if (f < best - 1e-15 * std::max(1.0, std::abs(best))) {
            best = f;
            w = cand;
            improved = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace oracle

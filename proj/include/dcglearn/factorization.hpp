#pragma once

#include <vector>

#include "dcglearn/encoding.hpp"

namespace dcglearn {

// A graded utility vector reshaped with labels as rows (best label first)
// and positions as columns. flatten(reshape(w)) == w.
struct WeightMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;  // row-major

  double at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
  double& at(int r, int c) { return entries[static_cast<std::size_t>(r * cols + c)]; }

  static WeightMatrix from_utility(const UtilityVector& w);
  UtilityVector to_utility() const;
};

// Leading singular triple of a weight matrix. gains_est = sigma1 * u1 (best
// label first), discounts_est = v1 with unit norm; both flipped together so
// the discount entries sum non-negative. residual_ratio = sigma2 / sigma1.
struct RankOneFactors {
  std::vector<double> gains_est;
  std::vector<double> discounts_est;
  double sigma1 = 0.0;
  double residual_ratio = 0.0;
};

// Power iteration on W'W to relative tolerance tol; sigma2 comes from one
// deflation pass. Throws DegenerateInputError on a zero matrix.
RankOneFactors rank_one_factorize(const WeightMatrix& wm, double tol = 1e-12);

}  // namespace dcglearn

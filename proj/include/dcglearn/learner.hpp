#pragma once

#include <cstdint>
#include <vector>

#include "dcglearn/encoding.hpp"
#include "dcglearn/errors.hpp"

namespace dcglearn {

// An observed preference: `winner` was judged better than `loser`. The
// margin is 1 for plain preferences, or a permutation distance when the
// degree of difference should scale the constraint.
struct PreferencePair {
  Encoding winner;
  Encoding loser;
  double margin = 1.0;
};

struct FitConfig {
  double c = 1.0;                // slack trade-off
  bool monotone = true;          // enforce per-block weight ordering
  double tolerance = 1e-10;      // relative objective change at which to stop
  int max_iterations = 50000;
  std::uint64_t seed = 0;        // start vector of the step-size power iteration
};

struct FitReport {
  UtilityVector weights;
  int iterations = 0;
  double objective = 0.0;
  // Largest relative per-iteration objective increase seen (0 when the
  // descent was strict throughout).
  double max_relative_increase = 0.0;
  bool converged = false;
};

// Minimizes  w'w + C * sum_ij max(0, margin_ij - w'(s_i - s_j))^2  over w,
// optionally restricted to weights non-increasing within each block. The
// squared-slack constraints of the underlying QP are folded in exactly:
// at the optimum the slack equals the hinge violation. Projected gradient
// with a fixed step from the Lipschitz bound; deterministic given cfg.
// Throws ConvergenceError when max_iterations is exhausted.
FitReport fit_report(const std::vector<PreferencePair>& pairs, const FitConfig& cfg);

UtilityVector fit(const std::vector<PreferencePair>& pairs, const FitConfig& cfg);

// Euclidean projection onto non-increasing sequences (pool adjacent
// violators).
std::vector<double> isotonic_project(std::vector<double> values);

// Labels a pair under a ground-truth utility: the first encoding wins only
// if its utility is strictly larger; ties go to the second. Margin 1.
PreferencePair label_pair(const UtilityVector& truth, const Encoding& s1, const Encoding& s2);

}  // namespace dcglearn

#include "dcglearn/learner.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dcglearn/rng.hpp"

namespace dcglearn {

namespace {

// winner - loser, nonzero entries only; values are +1/-1.
struct SparseDiff {
  std::vector<std::int32_t> index;
  std::vector<double> sign;
  double margin = 0.0;
};

double sparse_dot(const SparseDiff& d, const std::vector<double>& w) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.index.size(); ++i) {
    total += d.sign[i] * w[static_cast<std::size_t>(d.index[i])];
  }
  return total;
}

// Largest eigenvalue of sum_p d_p d_p' by power iteration.
double diff_gram_lmax(const std::vector<SparseDiff>& diffs, std::size_t dim, std::uint64_t seed) {
  Rng rng(Rng::mix(seed, 0x9d1f));
  std::vector<double> x(dim), y(dim);
  double norm = 0.0;
  for (auto& v : x) {
    v = rng.next_real(-1.0, 1.0);
    norm += v * v;
  }
  if (norm == 0.0) x[0] = 1.0;

  double lambda = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& d : diffs) {
      const double proj = sparse_dot(d, x);
      if (proj == 0.0) continue;
      for (std::size_t i = 0; i < d.index.size(); ++i) {
        y[static_cast<std::size_t>(d.index[i])] += d.sign[i] * proj;
      }
    }
    double ynorm = 0.0, dot = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      ynorm += y[i] * y[i];
      dot += x[i] * y[i];
    }
    if (ynorm == 0.0) return 0.0;
    ynorm = std::sqrt(ynorm);
    const double next = dot;  // Rayleigh quotient, x has unit norm
    const bool settled = std::abs(next - lambda) <= 1e-12 * std::max(1.0, std::abs(next));
    lambda = next;
    for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] / ynorm;
    if (settled && iter > 2) break;
  }
  return std::max(lambda, 0.0);
}

void project_blocks(std::vector<double>& w, int block_size) {
  std::vector<double> block(static_cast<std::size_t>(block_size));
  for (std::size_t start = 0; start < w.size(); start += static_cast<std::size_t>(block_size)) {
    block.assign(w.begin() + static_cast<std::ptrdiff_t>(start),
                 w.begin() + static_cast<std::ptrdiff_t>(start) + block_size);
    block = isotonic_project(std::move(block));
    std::copy(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(start));
  }
}

}  // namespace

std::vector<double> isotonic_project(std::vector<double> values) {
  // pool adjacent violators for a non-increasing target
  const std::size_t n = values.size();
  if (n < 2) return values;
  std::vector<double> mean;
  std::vector<std::size_t> count;
  mean.reserve(n);
  count.reserve(n);
  for (double v : values) {
    mean.push_back(v);
    count.push_back(1);
    while (mean.size() >= 2 && mean[mean.size() - 1] > mean[mean.size() - 2]) {
      const std::size_t m = mean.size();
      const double pooled = (mean[m - 2] * static_cast<double>(count[m - 2]) +
                             mean[m - 1] * static_cast<double>(count[m - 1])) /
                            static_cast<double>(count[m - 2] + count[m - 1]);
      count[m - 2] += count[m - 1];
      mean[m - 2] = pooled;
      mean.pop_back();
      count.pop_back();
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t b = 0; b < mean.size(); ++b) {
    out.insert(out.end(), count[b], mean[b]);
  }
  return out;
}

FitReport fit_report(const std::vector<PreferencePair>& pairs, const FitConfig& cfg) {
  if (pairs.empty()) throw std::invalid_argument("no preference pairs");
  if (!(cfg.c > 0.0)) throw std::invalid_argument("slack trade-off C must be positive");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const std::size_t dim = pairs.front().winner.size();
  const int block_size = pairs.front().winner.block_size;
  std::vector<SparseDiff> diffs;
  diffs.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.winner.size() != dim || p.loser.size() != dim || p.winner.block_size != block_size ||
        p.loser.block_size != block_size) {
      throw std::invalid_argument("preference pairs have inconsistent dimensions");
    }
    if (p.margin < 0.0) throw std::invalid_argument("margin must be >= 0");
    SparseDiff d;
    d.margin = p.margin;
    for (std::size_t i = 0; i < dim; ++i) {
      const int delta = static_cast<int>(p.winner.bits[i]) - static_cast<int>(p.loser.bits[i]);
      if (delta != 0) {
        d.index.push_back(static_cast<std::int32_t>(i));
        d.sign.push_back(static_cast<double>(delta));
      }
    }
    diffs.push_back(std::move(d));
  }

  // Fixed step from the global curvature bound 2 + 2C*lmax(sum dd'); the
  // 1.05 pad absorbs power-iteration underestimation.
  const double lmax = diff_gram_lmax(diffs, dim, cfg.seed);
  const double step = 1.0 / (2.0 + 2.0 * cfg.c * lmax * 1.05);

  std::vector<double> w(dim, 0.0);
  std::vector<double> grad(dim);
  std::vector<double> residual(diffs.size());

  auto objective_and_residuals = [&](const std::vector<double>& x) {
    double f = 0.0;
    for (double v : x) f += v * v;
    for (std::size_t p = 0; p < diffs.size(); ++p) {
      const double r = diffs[p].margin - sparse_dot(diffs[p], x);
      residual[p] = r;
      if (r > 0.0) f += cfg.c * r * r;
    }
    return f;
  };

  FitReport report;
  double f_prev = objective_and_residuals(w);
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    for (std::size_t i = 0; i < dim; ++i) grad[i] = 2.0 * w[i];
    for (std::size_t p = 0; p < diffs.size(); ++p) {
      if (residual[p] <= 0.0) continue;
      const double coeff = 2.0 * cfg.c * residual[p];
      const auto& d = diffs[p];
      for (std::size_t i = 0; i < d.index.size(); ++i) {
        grad[static_cast<std::size_t>(d.index[i])] -= coeff * d.sign[i];
      }
    }
    for (std::size_t i = 0; i < dim; ++i) w[i] -= step * grad[i];
    if (cfg.monotone) project_blocks(w, block_size);

    const double f = objective_and_residuals(w);
    report.iterations = iter + 1;
    if (f > f_prev) {
      const double rel = (f - f_prev) / std::max(std::abs(f_prev), 1e-300);
      if (rel > report.max_relative_increase) report.max_relative_increase = rel;
    }
    if (f == 0.0 || f_prev - f < cfg.tolerance * std::abs(f)) {
      report.converged = true;
      report.objective = f;
      break;
    }
    f_prev = f;
  }
  if (!report.converged) {
    throw ConvergenceError("preference fit did not converge within " +
                               std::to_string(cfg.max_iterations) + " iterations (objective " +
                               std::to_string(f_prev) + ")",
                           f_prev);
  }
  report.weights = UtilityVector{std::move(w), block_size};
  return report;
}

UtilityVector fit(const std::vector<PreferencePair>& pairs, const FitConfig& cfg) {
  return fit_report(pairs, cfg).weights;
}

PreferencePair label_pair(const UtilityVector& truth, const Encoding& s1, const Encoding& s2) {
  const double u1 = utility(truth, s1);
  const double u2 = utility(truth, s2);
  if (u1 > u2) return {s1, s2, 1.0};
  return {s2, s1, 1.0};
}

}  // namespace dcglearn

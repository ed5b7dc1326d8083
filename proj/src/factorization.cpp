#include "dcglearn/factorization.hpp"

#include <cmath>
#include <stdexcept>

#include "dcglearn/errors.hpp"

namespace dcglearn {

namespace {

double norm2(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x * x;
  return std::sqrt(total);
}

// y = W' W x, optionally re-orthogonalized against `against` first.
void gram_apply(const WeightMatrix& wm, const std::vector<double>& x, std::vector<double>& y,
                std::vector<double>& scratch_rows, const std::vector<double>* against) {
  std::vector<double> xi = x;
  if (against) {
    double dot = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) dot += xi[i] * (*against)[i];
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] -= dot * (*against)[i];
  }
  for (int r = 0; r < wm.rows; ++r) {
    double acc = 0.0;
    for (int c = 0; c < wm.cols; ++c) acc += wm.at(r, c) * xi[static_cast<std::size_t>(c)];
    scratch_rows[static_cast<std::size_t>(r)] = acc;
  }
  for (int c = 0; c < wm.cols; ++c) {
    double acc = 0.0;
    for (int r = 0; r < wm.rows; ++r) acc += wm.at(r, c) * scratch_rows[static_cast<std::size_t>(r)];
    y[static_cast<std::size_t>(c)] = acc;
  }
}

// Leading singular value and right vector, restricted to the orthogonal
// complement of `against` when given.
double power_singular(const WeightMatrix& wm, double tol, const std::vector<double>* against,
                      std::vector<double>& v_out) {
  const std::size_t n = static_cast<std::size_t>(wm.cols);
  std::vector<double> v(n), y(n), rows(static_cast<std::size_t>(wm.rows));
  // deterministic start, generically non-orthogonal to the target direction
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i);
  if (against) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * (*against)[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * (*against)[i];
  }
  double vn = norm2(v);
  if (vn == 0.0) {
    v[0] = 1.0;
    vn = 1.0;
  }
  for (auto& x : v) x /= vn;

  double eig = 0.0;
  for (int iter = 0; iter < 100000; ++iter) {
    gram_apply(wm, v, y, rows, against);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * y[i];
    const double yn = norm2(y);
    if (yn == 0.0) {
      eig = 0.0;
      break;
    }
    const bool settled = std::abs(dot - eig) <= tol * std::max(std::abs(dot), 1e-300);
    eig = dot;
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / yn;
    if (settled && iter > 2) break;
  }
  v_out = v;
  return std::sqrt(std::max(eig, 0.0));
}

}  // namespace

WeightMatrix WeightMatrix::from_utility(const UtilityVector& w) {
  if (w.block_size < 1 || w.weights.empty() ||
      w.weights.size() % static_cast<std::size_t>(w.block_size) != 0) {
    throw std::invalid_argument("malformed utility vector");
  }
  WeightMatrix wm;
  wm.rows = w.block_size;
  wm.cols = w.blocks();
  wm.entries.resize(w.weights.size());
  for (int k = 0; k < wm.cols; ++k) {
    for (int l = 0; l < wm.rows; ++l) {
      wm.at(l, k) = w.weights[static_cast<std::size_t>(k * wm.rows + l)];
    }
  }
  return wm;
}

UtilityVector WeightMatrix::to_utility() const {
  UtilityVector w;
  w.block_size = rows;
  w.weights.resize(entries.size());
  for (int k = 0; k < cols; ++k) {
    for (int l = 0; l < rows; ++l) {
      w.weights[static_cast<std::size_t>(k * rows + l)] = at(l, k);
    }
  }
  return w;
}

RankOneFactors rank_one_factorize(const WeightMatrix& wm, double tol) {
  if (wm.rows < 1 || wm.cols < 1 ||
      wm.entries.size() != static_cast<std::size_t>(wm.rows) * static_cast<std::size_t>(wm.cols)) {
    throw std::invalid_argument("malformed weight matrix");
  }
  bool nonzero = false;
  for (double x : wm.entries) {
    if (x != 0.0) nonzero = true;
  }
  if (!nonzero) throw DegenerateInputError("cannot factorize the zero matrix");

  RankOneFactors out;
  std::vector<double> v1;
  out.sigma1 = power_singular(wm, tol, nullptr, v1);
  if (out.sigma1 == 0.0) throw DegenerateInputError("leading singular value is zero");

  std::vector<double> u1(static_cast<std::size_t>(wm.rows), 0.0);
  for (int r = 0; r < wm.rows; ++r) {
    double acc = 0.0;
    for (int c = 0; c < wm.cols; ++c) acc += wm.at(r, c) * v1[static_cast<std::size_t>(c)];
    u1[static_cast<std::size_t>(r)] = acc / out.sigma1;
  }

  double v_sum = 0.0;
  for (double x : v1) v_sum += x;
  if (v_sum < 0.0) {
    for (auto& x : v1) x = -x;
    for (auto& x : u1) x = -x;
  }

  double sigma2 = 0.0;
  if (wm.rows > 1 && wm.cols > 1) {
    std::vector<double> v2;
    sigma2 = power_singular(wm, tol, &v1, v2);
  }
  out.residual_ratio = sigma2 / out.sigma1;
  out.discounts_est = std::move(v1);
  out.gains_est = std::move(u1);
  for (auto& x : out.gains_est) x *= out.sigma1;
  return out;
}

}  // namespace dcglearn

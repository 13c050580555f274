#pragma once

// Shared helpers for the test binaries: deterministic random draws, dense
// Eigen reference computations used as independent oracles, and central
// finite differences for gradient/Jacobian cross-checks.

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <vector>

#include "so5/basis.hpp"
#include "so5/inertia.hpp"
#include "so5/skew_matrix.hpp"

namespace so5::testing {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline so5::SkewMatrixd random_skew(Rng& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, 1.0);
  so5::SkewMatrixd m(n);
  for (Eigen::Index i = 0; i < m.upper_size(); ++i) m.upper()[i] = scale * normal(rng);
  return m;
}

inline so5::Coordinates10d random_coords(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, 1.0);
  so5::Coordinates10d c;
  for (int i = 0; i < so5::kCoordCount; ++i) c[i] = scale * normal(rng);
  return c;
}

/// Random inertia spec with positive, well separated lambdas (pair gaps
/// >= 0.3 so the generator-integral denominators stay well conditioned).
/// When `ordered` is set the values come out strictly decreasing, which the
/// equilibrium/stability analyses assume.
inline so5::InertiaSpecd random_inertia(Rng& rng, Eigen::Index n, bool ordered = true) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> vals;
  while (true) {
    vals.clear();
    for (Eigen::Index i = 0; i < n; ++i) vals.push_back(0.5 + 8.0 * uni(rng));
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    bool ok = true;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (vals[i] - vals[i + 1] < 0.3) ok = false;
    if (ok) break;
  }
  if (!ordered) std::shuffle(vals.begin(), vals.end(), rng);
  Eigen::VectorXd lambdas(n);
  for (Eigen::Index i = 0; i < n; ++i) lambdas[i] = vals[i];
  return so5::InertiaSpecd(lambdas);
}

/// Random regular orbit parameters: draws a > b > 0 with bounded ratio and
/// returns (a, b).  The corresponding orbit invariants are
/// c1 = (a^2+b^2)/2, c2 = (a^4+b^4)/4, which are automatically regular.
inline std::pair<double, double> random_weyl_values(Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double b = 0.5 + 1.5 * uni(rng);
  const double a = b * (1.3 + 2.0 * uni(rng));
  return {a, b};
}

/// Central finite-difference gradient of a scalar function of 10 coordinates.
template <typename F>
so5::Coordinates10d fd_gradient(const F& f, const so5::Coordinates10d& c, double h = 1e-6) {
  so5::Coordinates10d g;
  for (int p = 0; p < so5::kCoordCount; ++p) {
    so5::Coordinates10d cp = c, cm = c;
    cp[p] += h;
    cm[p] -= h;
    g[p] = (f(cp) - f(cm)) / (2.0 * h);
  }
  return g;
}

/// Central finite-difference Jacobian of a map R^10 -> R^10.
template <typename F>
so5::Matrix10d fd_jacobian(const F& f, const so5::Coordinates10d& c, double h = 1e-6) {
  so5::Matrix10d jac;
  for (int p = 0; p < so5::kCoordCount; ++p) {
    so5::Coordinates10d cp = c, cm = c;
    cp[p] += h;
    cm[p] -= h;
    jac.col(p) = (f(cp) - f(cm)) / (2.0 * h);
  }
  return jac;
}

// ---- dense-matrix reference paths (independent of the triangle storage) ----

inline Eigen::MatrixXd dense_omega(const Eigen::MatrixXd& m, const so5::InertiaSpecd& inertia) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) w(i, j) = m(i, j) / inertia.pair_sum(i, j);
  return w;
}

inline double dense_hamiltonian(const Eigen::MatrixXd& m, const so5::InertiaSpecd& inertia) {
  return -0.25 * (m * dense_omega(m, inertia)).trace();
}

inline double dense_c1(const Eigen::MatrixXd& m) { return -0.25 * (m * m).trace(); }

inline double dense_c2(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd m2 = m * m;
  return 0.125 * (m2 * m2).trace();
}

/// -1/4 tr( sum_{p=0..3} J^p M J^(3-p) Omega ): trace-sum form of the first
/// Manakov-tower integral beyond H and C1.
inline double dense_k1_trace(const Eigen::MatrixXd& m, const so5::InertiaSpecd& inertia) {
  const Eigen::MatrixXd omega = dense_omega(m, inertia);
  const Eigen::MatrixXd j = inertia.lambdas().asDiagonal();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (int p = 0; p <= 3; ++p) {
    Eigen::MatrixXd jp = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int q = 0; q < p; ++q) jp = jp * j;
    Eigen::MatrixXd jq = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int q = 0; q < 3 - p; ++q) jq = jq * j;
    acc += jp * m * jq;
  }
  return -0.25 * (acc * omega).trace();
}

/// Same with exponent 5: trace-sum form of the second tower integral.
inline double dense_k2_trace(const Eigen::MatrixXd& m, const so5::InertiaSpecd& inertia) {
  const Eigen::MatrixXd omega = dense_omega(m, inertia);
  const Eigen::MatrixXd j = inertia.lambdas().asDiagonal();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (int p = 0; p <= 5; ++p) {
    Eigen::MatrixXd jp = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int q = 0; q < p; ++q) jp = jp * j;
    Eigen::MatrixXd jq = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int q = 0; q < 5 - p; ++q) jq = jq * j;
    acc += jp * m * jq;
  }
  return -0.25 * (acc * omega).trace();
}

}  // namespace so5::testing

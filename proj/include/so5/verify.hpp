#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "so5/basis.hpp"
#include "so5/invariants.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

/// Outcome of one randomized identity suite: the worst normalized error over
/// all draws, checked against the suite's frozen tolerance.
struct SuiteResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 42;
inline constexpr int kDefaultVerifySamples = 200;

namespace detail {

inline SkewMatrixd draw_skew(std::mt19937_64& rng, Eigen::Index n, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  SkewMatrixd m(n);
  for (Eigen::Index i = 0; i < m.upper_size(); ++i) m.upper()[i] = gauss(rng);
  return m;
}

/// Strictly decreasing positive moments with gaps of at least 0.3 so the
/// lambda_i^2 - lambda_k^2 denominators in the generator integrals stay well
/// conditioned.
inline InertiaSpecd draw_inertia(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> jitter(0.0, 0.7);
  Eigen::VectorXd lambdas(n);
  double value = 0.5 + jitter(rng);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    lambdas[i] = value;
    value += 0.3 + jitter(rng);
  }
  return InertiaSpecd(lambdas);
}

inline void check_suite_args(Eigen::Index n, int samples, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": need dimension n >= 2");
  if (samples < 1) throw std::invalid_argument(std::string(what) + ": need samples >= 1");
}

}  // namespace detail

/// Identity m_r = sum_i lambda_i^r F_i between the averaged shift integrals
/// m_r and the generator integrals F_i, checked on random states of so(n).
inline SuiteResult run_generator_identity_suite(std::uint64_t seed, Eigen::Index n,
                                                int samples) {
  detail::check_suite_args(n, samples, "run_generator_identity_suite");
  std::mt19937_64 rng(seed);
  SuiteResult result;
  result.name = "generator-identity[n=" + std::to_string(n) + "]";
  result.samples = samples;
  result.tolerance = 1e-10;
  for (int rep = 0; rep < samples; ++rep) {
    const InertiaSpecd inertia = detail::draw_inertia(rng, n);
    const SkewMatrixd m = detail::draw_skew(rng, n, 1.5);
    const Eigen::VectorXd f = generator_integrals(m, inertia);
    for (int r = 1; r <= static_cast<int>(n); ++r) {
      const double mr = mishchenko_integral(m, inertia, r);
      double combo = 0.0;
      for (Eigen::Index i = 0; i < n; ++i)
        combo += std::pow(inertia.lambda(i), r) * f[i];
      const double err = std::abs(mr - combo) / (1.0 + std::abs(mr));
      result.max_error = std::max(result.max_error, err);
    }
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

/// Structure of the coordinate Poisson tensor on so(5)*: both Casimir
/// gradients lie in its kernel, and contracting it with grad H reproduces
/// the equations of motion.
inline SuiteResult run_poisson_structure_suite(std::uint64_t seed, int samples) {
  detail::check_suite_args(5, samples, "run_poisson_structure_suite");
  std::mt19937_64 rng(seed);
  SuiteResult result;
  result.name = "poisson-structure";
  result.samples = samples;
  result.tolerance = 1e-12;
  for (int rep = 0; rep < samples; ++rep) {
    const InertiaSpecd inertia = detail::draw_inertia(rng, 5);
    const SkewMatrixd m = detail::draw_skew(rng, 5, 1.5);
    const Coordinates10d c = matrix_to_coords(m);
    const Matrix10d gamma = poisson_tensor(c);

    const Coordinates10d g1 = matrix_to_coords(grad_casimir_c1(m));
    const Coordinates10d g2 = matrix_to_coords(grad_casimir_c2(m));
    const double kernel1 = (gamma * g1).norm() / (1.0 + c.norm() * g1.norm());
    const double kernel2 = (gamma * g2).norm() / (1.0 + c.norm() * g2.norm());

    const Coordinates10d field = gamma * grad_hamiltonian_coords(c, inertia);
    const Coordinates10d rhs = matrix_to_coords(rigid_body_rhs(m, inertia));
    const double motion =
        (field - rhs).norm() / (1.0 + c.squaredNorm() / inertia.min_pair_sum());

    result.max_error = std::max({result.max_error, kernel1, kernel2, motion});
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

/// Agreement between the matrix-trace and expanded-coordinate evaluation
/// paths for every tracked integral and for the equations of motion.
inline SuiteResult run_two_path_suite(std::uint64_t seed, int samples) {
  detail::check_suite_args(5, samples, "run_two_path_suite");
  std::mt19937_64 rng(seed);
  SuiteResult result;
  result.name = "two-path";
  result.samples = samples;
  result.tolerance = 1e-12;
  const auto rel = [](double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); };
  for (int rep = 0; rep < samples; ++rep) {
    const InertiaSpecd inertia = detail::draw_inertia(rng, 5);
    const SkewMatrixd m = detail::draw_skew(rng, 5, 1.5);
    const Coordinates10d c = matrix_to_coords(m);

    double err = rel(hamiltonian_coordinate_path(c, inertia), hamiltonian(m, inertia));
    err = std::max(err, rel(casimir_c1_coordinate_path(c), casimir_c1(m)));
    err = std::max(err, rel(casimir_c2_coordinate_path(c), casimir_c2(m)));
    err = std::max(err, rel(manakov_k1_trace_path(m, inertia), manakov_k1(m, inertia)));
    err = std::max(err, rel(manakov_k2_trace_path(m, inertia), manakov_k2(m, inertia)));
    err = std::max(err, rel(manakov_k3_trace_path(m, inertia), manakov_k3(m, inertia)));

    const Coordinates10d f_coords = rhs_coordinate_path(c, inertia);
    const Coordinates10d f_matrix = matrix_to_coords(rigid_body_rhs(m, inertia));
    err = std::max(err, (f_coords - f_matrix).norm() / (1.0 + f_matrix.norm()));

    result.max_error = std::max(result.max_error, err);
  }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

/// The signed-index bracket table against brute-force commutators of the
/// orthonormal basis.  Every bracket lands exactly on +/- a basis element (or
/// zero), so the comparison is exact in floating point.
inline SuiteResult run_bracket_table_suite() {
  SuiteResult result;
  result.name = "bracket-table";
  result.samples = kCoordCount * kCoordCount;
  result.tolerance = 0.0;
  for (int i = 1; i <= kCoordCount; ++i)
    for (int j = 1; j <= kCoordCount; ++j) {
      const SkewMatrixd lhs =
          commutator(basis_element<double>(i), basis_element<double>(j));
      const int k = structure_constant(i, j);
      SkewMatrixd expected(5);
      if (k != 0) expected = (k < 0 ? -1.0 : 1.0) * basis_element<double>(std::abs(k));
      result.max_error = std::max(result.max_error, (lhs - expected).norm());
    }
  result.pass = result.max_error <= result.tolerance;
  return result;
}

/// Everything at once: the generator identity across so(4)..so(8) plus the
/// three so(5) structure suites.  Each suite owns an independent stream
/// derived from the base seed, so adding a suite never reshuffles the rest.
inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int samples) {
  std::vector<SuiteResult> out;
  for (Eigen::Index n = 4; n <= 8; ++n)
    out.push_back(run_generator_identity_suite(seed + static_cast<std::uint64_t>(n), n, samples));
  out.push_back(run_poisson_structure_suite(seed + 101, samples));
  out.push_back(run_two_path_suite(seed + 102, samples));
  out.push_back(run_bracket_table_suite());
  return out;
}

}  // namespace so5

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "so5/basis.hpp"
#include "so5/equilibria.hpp"
#include "so5/inertia.hpp"
#include "so5/invariants.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

// ---------------------------------------------------------------------------
// Tangent space of the adjoint orbit
// ---------------------------------------------------------------------------

/// Orthonormal basis (10x8, columns in coordinates) of the tangent space of
/// the adjoint orbit through m: the joint kernel of dC1 and dC2.  Refuses
/// points where the two Casimir differentials are nearly dependent, since
/// the orbit is not regular there.
template <typename Scalar>
Eigen::Matrix<Scalar, 10, 8> orbit_tangent_basis(const SkewMatrix<Scalar>& m) {
  if (m.dim() != 5)
    throw std::invalid_argument("orbit_tangent_basis: requires a 5 x 5 state");
  Eigen::Matrix<Scalar, 10, 2> normals;
  normals.col(0) = matrix_to_coords(grad_casimir_c1(m));
  normals.col(1) = matrix_to_coords(grad_casimir_c2(m));
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, 10, 2>> svd(normals, Eigen::ComputeFullU);
  const auto& sigma = svd.singularValues();
  if (!(sigma[1] > Scalar(1e-10) * sigma[0])) {
    std::ostringstream msg;
    msg << "orbit_tangent_basis: Casimir differentials are dependent at this point "
        << "(singular values " << sigma[0] << ", " << sigma[1]
        << "); the orbit is not regular";
    throw std::domain_error(msg.str());
  }
  // The last 8 left singular vectors span the orthogonal complement of the
  // two Casimir gradients.
  return svd.matrixU().template rightCols<8>();
}

/// Fixed orthonormal basis of the orbit tangent space at a Cartan-plane
/// point: the 8 coordinate directions complementary to the plane, in
/// increasing coordinate order.  At such points span{dC1, dC2} is the plane
/// itself, so this selection is exactly the tangent space, and it is the
/// basis in which the Hessian minors are conventionally reported.
template <typename Scalar>
Eigen::Matrix<Scalar, 10, 8> cartan_complement_basis(int k) {
  const CartanFamily& fam = cartan_family(k);
  Eigen::Matrix<Scalar, 10, 8> p = Eigen::Matrix<Scalar, 10, 8>::Zero();
  int col = 0;
  for (int q = 0; q < kCoordCount; ++q) {
    if (q == fam.coord_a || q == fam.coord_b) continue;
    p(q, col++) = Scalar(1);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Closed-form factors of the restricted characteristic polynomial
// ---------------------------------------------------------------------------

/// Coefficients of the three factors
///   U t^2 + U' = 0,  V t^2 + V' = 0,  W t^4 + W' t^2 + W'' = 0
/// of the characteristic polynomial of the linearization at the plane point
/// M^k_{alpha,beta}, restricted to the orbit tangent space.  W' has no
/// closed form here; it is recovered numerically from the spectrum and
/// reported by restricted_spectrum.
template <typename Scalar>
struct FactorCoefficients {
  int k;
  Scalar u, u_prime;
  Scalar v, v_prime;
  Scalar w, w_prime, w_pprime;
};

using FactorCoefficientsd = FactorCoefficients<double>;

namespace detail {

/// Index data (1-based lambda indices) defining the closed factor forms of
/// one family:
///   U  = s(u_sq)^2 * s(u_pairs[0]) * s(u_pairs[1])
///   U' = u_sign * beta^2  * d(u_pairs[0]) * d(u_pairs[1])
///   V  = s(v_sq)^2 * s(v_pairs[0]) * s(v_pairs[1])
///   V' = v_sign * alpha^2 * d(v_pairs[0]) * d(v_pairs[1])
///   W  = s(v_sq)^4 * s(u_sq)^4 * prod s(w_pairs)
///   W''= w_sign * prod d(w_pairs) * [alpha^2 s(u_sq)^2 - beta^2 s(v_sq)^2]^2
/// with s(i,j) = lambda_i + lambda_j and d(i,j) = lambda_i - lambda_j.
struct FactorFormSpec {
  int u_sq[2];
  int u_pairs[2][2];
  int u_sign;
  int v_sq[2];
  int v_pairs[2][2];
  int v_sign;
  int w_pairs[4][2];
  int w_sign;
};

inline const FactorFormSpec& factor_form_spec(int k) {
  static constexpr std::array<FactorFormSpec, 15> specs = {{
      // k = 1
      {{3, 4}, {{3, 5}, {4, 5}}, +1, {1, 2}, {{1, 5}, {2, 5}}, +1,
       {{1, 3}, {1, 4}, {2, 3}, {2, 4}}, +1},
      // k = 2
      {{2, 5}, {{1, 2}, {1, 5}}, +1, {3, 4}, {{1, 3}, {1, 4}}, +1,
       {{2, 3}, {2, 4}, {3, 5}, {4, 5}}, +1},
      // k = 3
      {{1, 5}, {{1, 2}, {2, 5}}, -1, {3, 4}, {{2, 3}, {2, 4}}, +1,
       {{1, 3}, {1, 4}, {3, 5}, {4, 5}}, +1},
      // k = 4
      {{1, 5}, {{1, 3}, {3, 5}}, -1, {2, 4}, {{2, 3}, {3, 4}}, -1,
       {{1, 2}, {1, 4}, {2, 5}, {4, 5}}, +1},
      // k = 5
      {{1, 5}, {{1, 4}, {4, 5}}, -1, {2, 3}, {{2, 4}, {3, 4}}, +1,
       {{1, 2}, {1, 3}, {2, 5}, {3, 5}}, +1},
      // k = 6
      {{2, 4}, {{2, 5}, {4, 5}}, +1, {1, 3}, {{1, 5}, {3, 5}}, +1,
       {{1, 2}, {1, 4}, {2, 3}, {3, 4}}, -1},
      // k = 7
      {{3, 5}, {{1, 3}, {1, 5}}, +1, {2, 4}, {{1, 4}, {1, 2}}, +1,
       {{2, 3}, {2, 5}, {3, 4}, {4, 5}}, -1},
      // k = 8
      {{4, 5}, {{1, 4}, {1, 5}}, +1, {2, 3}, {{1, 2}, {1, 3}}, +1,
       {{2, 4}, {2, 5}, {3, 4}, {3, 5}}, +1},
      // k = 9
      {{1, 4}, {{1, 5}, {4, 5}}, +1, {2, 3}, {{2, 5}, {3, 5}}, +1,
       {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, +1},
      // k = 10
      {{2, 5}, {{2, 4}, {4, 5}}, -1, {1, 3}, {{1, 4}, {3, 4}}, +1,
       {{1, 2}, {1, 5}, {2, 3}, {3, 5}}, -1},
      // k = 11
      {{2, 5}, {{2, 3}, {3, 5}}, -1, {1, 4}, {{1, 3}, {3, 4}}, -1,
       {{1, 2}, {1, 5}, {2, 4}, {4, 5}}, -1},
      // k = 12
      {{4, 5}, {{3, 4}, {3, 5}}, +1, {1, 2}, {{1, 3}, {2, 3}}, +1,
       {{1, 4}, {1, 5}, {2, 4}, {2, 5}}, +1},
      // k = 13
      {{3, 5}, {{3, 4}, {4, 5}}, -1, {1, 2}, {{1, 4}, {2, 4}}, +1,
       {{1, 3}, {1, 5}, {2, 3}, {2, 5}}, +1},
      // k = 14
      {{3, 5}, {{2, 3}, {2, 5}}, +1, {1, 4}, {{1, 2}, {2, 4}}, -1,
       {{1, 3}, {1, 5}, {3, 4}, {4, 5}}, -1},
      // k = 15
      {{4, 5}, {{2, 5}, {2, 4}}, +1, {1, 3}, {{1, 2}, {2, 3}}, -1,
       {{1, 4}, {1, 5}, {3, 4}, {3, 5}}, +1},
  }};
  if (k < 1 || k > 15)
    throw std::invalid_argument("factor_form_spec: family index must be in 1..15");
  return specs[k - 1];
}

}  // namespace detail

/// Evaluate the closed factor forms for family k at plane values
/// (alpha, beta); for the (b,a)-type slots call with the values swapped.
/// w_prime is left at zero (no closed form; see restricted_spectrum).
template <typename Scalar>
FactorCoefficients<Scalar> factor_coefficients(int k, Scalar alpha, Scalar beta,
                                               const InertiaSpec<Scalar>& inertia) {
  if (inertia.dim() != 5)
    throw std::invalid_argument("factor_coefficients: requires a 5-dimensional inertia spec");
  inertia.require_strictly_decreasing();
  const detail::FactorFormSpec& spec = detail::factor_form_spec(k);
  const auto& lam = inertia.lambdas();
  auto s = [&](const int p[2]) { return lam[p[0] - 1] + lam[p[1] - 1]; };
  auto d = [&](const int p[2]) { return lam[p[0] - 1] - lam[p[1] - 1]; };

  const Scalar su = s(spec.u_sq), sv = s(spec.v_sq);
  FactorCoefficients<Scalar> f;
  f.k = k;
  f.u = su * su * s(spec.u_pairs[0]) * s(spec.u_pairs[1]);
  f.u_prime = Scalar(spec.u_sign) * beta * beta * d(spec.u_pairs[0]) * d(spec.u_pairs[1]);
  f.v = sv * sv * s(spec.v_pairs[0]) * s(spec.v_pairs[1]);
  f.v_prime = Scalar(spec.v_sign) * alpha * alpha * d(spec.v_pairs[0]) * d(spec.v_pairs[1]);
  f.w = su * su * su * su * sv * sv * sv * sv;
  Scalar dprod(1);
  for (const auto& pair : spec.w_pairs) {
    f.w *= s(pair);
    dprod *= d(pair);
  }
  const Scalar bracket = alpha * alpha * su * su - beta * beta * sv * sv;
  f.w_prime = Scalar(0);
  f.w_pprime = Scalar(spec.w_sign) * dprod * bracket * bracket;
  return f;
}

// ---------------------------------------------------------------------------
// Restricted spectrum and its closed-form cross-check
// ---------------------------------------------------------------------------

template <typename Scalar>
struct SpectrumReport {
  std::array<std::complex<Scalar>, 8> eigenvalues;  // of the restricted linearization
  Scalar max_real_part;
  Scalar tolerance;       // spectral gate: 1e-8 * ||restricted Jacobian||
  Scalar pairing_error;   // residual of the +/- symmetry of the spectrum
  Scalar u_match_error;   // relative mismatch of the U-quadratic roots
  Scalar v_match_error;   // relative mismatch of the V-quadratic roots
  Scalar quartic_product_error;  // relative mismatch of prod(t^2) vs W''/W
  bool matched;           // all three factor residuals within 1e-8 gates
  FactorCoefficients<Scalar> factors;  // incl. numerically recovered W'
};

using SpectrumReportd = SpectrumReport<double>;

namespace detail {

/// Greedy +/- pairing of the 8 eigenvalues; returns the worst |t_i + t_j|.
template <typename Scalar>
Scalar spectrum_pairing_error(const std::array<std::complex<Scalar>, 8>& ev) {
  std::array<bool, 8> used{};
  Scalar worst(0);
  for (int i = 0; i < 8; ++i) {
    if (used[i]) continue;
    used[i] = true;
    int best = -1;
    Scalar best_err = std::numeric_limits<Scalar>::infinity();
    for (int j = 0; j < 8; ++j) {
      if (used[j]) continue;
      const Scalar err = std::abs(ev[i] + ev[j]);
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_err);
  }
  return worst;
}

}  // namespace detail

/// Eigenvalues of the linearization at the plane point of family k carrying
/// slot values (alpha, beta), restricted to the orbit tangent space, matched
/// against the closed-form factorization.  The two quadratic factors are
/// located as the eigenvalue pairs nearest the roots of U t^2 + U' and
/// V t^2 + V'; the remaining four eigenvalues are checked through the
/// product identity prod t_i = W''/W, and the middle quartic coefficient is
/// recovered as W' = -W * (t_1^2 + t_2^2).
template <typename Scalar>
SpectrumReport<Scalar> restricted_spectrum(int k, Scalar alpha, Scalar beta,
                                           const InertiaSpec<Scalar>& inertia) {
  using Complex = std::complex<Scalar>;
  const SkewMatrix<Scalar> m = cartan_point(k, alpha, beta);
  const Eigen::Matrix<Scalar, 10, 8> p = cartan_complement_basis<Scalar>(k);
  const Matrix10<Scalar> a = rhs_jacobian(m, inertia);
  const Eigen::Matrix<Scalar, 8, 8> b = p.transpose() * a * p;

  SpectrumReport<Scalar> report;
  report.factors = factor_coefficients(k, alpha, beta, inertia);

  Eigen::EigenSolver<Eigen::Matrix<Scalar, 8, 8>> solver(b);
  for (int i = 0; i < 8; ++i) report.eigenvalues[i] = solver.eigenvalues()[i];
  report.tolerance = Scalar(1e-8) * b.norm();
  report.max_real_part = Scalar(0);
  for (const auto& ev : report.eigenvalues)
    report.max_real_part = std::max(report.max_real_part, ev.real());
  report.pairing_error = detail::spectrum_pairing_error(report.eigenvalues);

  // Match the two closed-form quadratics against the nearest eigenvalues.
  std::array<bool, 8> used{};
  auto claim_pair = [&](Scalar t_squared) {
    const Complex root = std::sqrt(Complex(t_squared));
    Scalar worst(0);
    for (const Complex target : {root, -root}) {
      int best = -1;
      Scalar best_err = std::numeric_limits<Scalar>::infinity();
      for (int i = 0; i < 8; ++i) {
        if (used[i]) continue;
        const Scalar err = std::abs(report.eigenvalues[i] - target);
        if (err < best_err) {
          best_err = err;
          best = i;
        }
      }
      used[best] = true;
      worst = std::max(worst, best_err / std::max(std::abs(root), report.tolerance));
    }
    return worst;
  };
  report.u_match_error = claim_pair(-report.factors.u_prime / report.factors.u);
  report.v_match_error = claim_pair(-report.factors.v_prime / report.factors.v);

  // The four remaining eigenvalues belong to the quartic factor.
  Complex product(1), sum_sq(0);
  for (int i = 0; i < 8; ++i) {
    if (used[i]) continue;
    product *= report.eigenvalues[i];
    sum_sq += report.eigenvalues[i] * report.eigenvalues[i];
  }
  const Scalar target = report.factors.w_pprime / report.factors.w;
  const Scalar denom = std::max(std::abs(target), report.tolerance * report.tolerance);
  report.quartic_product_error = std::abs(product - Complex(target)) / denom;
  report.factors.w_prime = -report.factors.w * sum_sq.real() / Scalar(2);

  report.matched = report.u_match_error <= Scalar(1e-8) &&
                   report.v_match_error <= Scalar(1e-8) &&
                   report.quartic_product_error <= Scalar(1e-8);
  return report;
}

/// Convenience overload resolving an equilibrium point's provenance.
template <typename Scalar>
SpectrumReport<Scalar> restricted_spectrum(const EquilibriumPoint<Scalar>& eq,
                                           const InertiaSpec<Scalar>& inertia) {
  const auto* slot = std::get_if<CartanSlotProvenance<Scalar>>(&eq.provenance);
  if (slot == nullptr)
    throw std::invalid_argument(
        "restricted_spectrum: closed-form matching covers the plane-family slots only");
  const auto [alpha, beta] = slot_values(slot->slot, slot->a, slot->b);
  return restricted_spectrum(slot->k, alpha, beta, inertia);
}

// ---------------------------------------------------------------------------
// Degenerate-quartic side condition for families 6 and 7
// ---------------------------------------------------------------------------

/// True when c1^2 (s1^4 + s2^4) != c2 (s1^2 + s2^2)^2 for the family's pair
/// of lambda-sums (family 6: s1 = l2+l4, s2 = l1+l3; family 7: s1 = l2+l4,
/// s2 = l3+l5).  Exactly when this holds, the quartic factor at the
/// (+-a,+-b) slots has a nonzero constant term and instability follows; at
/// equality the quartic degenerates and the classification stays open.
template <typename Scalar>
bool special_condition(int k, const OrbitInvariants<Scalar>& inv,
                       const InertiaSpec<Scalar>& inertia, Scalar rel_tol = Scalar(1e-12)) {
  if (k != 6 && k != 7)
    throw std::invalid_argument("special_condition: defined for families 6 and 7 only");
  if (inertia.dim() != 5)
    throw std::invalid_argument("special_condition: requires a 5-dimensional inertia spec");
  inv.require_regular();
  const auto& lam = inertia.lambdas();
  const Scalar s1 = lam[1] + lam[3];                          // l2 + l4
  const Scalar s2 = (k == 6) ? lam[0] + lam[2] : lam[2] + lam[4];  // l1+l3 or l3+l5
  const Scalar lhs = inv.c1 * inv.c1 * (s1 * s1 * s1 * s1 + s2 * s2 * s2 * s2);
  const Scalar sum_sq = s1 * s1 + s2 * s2;
  const Scalar rhs = inv.c2 * sum_sq * sum_sq;
  return std::abs(lhs - rhs) > rel_tol * std::max(std::abs(lhs), std::abs(rhs));
}

/// The c2 value at which the family-k side condition degenerates to
/// equality for the given c1 (useful for constructing the open cases).
template <typename Scalar>
Scalar special_condition_equality_c2(int k, Scalar c1, const InertiaSpec<Scalar>& inertia) {
  if (k != 6 && k != 7)
    throw std::invalid_argument("special_condition_equality_c2: families 6 and 7 only");
  const auto& lam = inertia.lambdas();
  const Scalar s1 = lam[1] + lam[3];
  const Scalar s2 = (k == 6) ? lam[0] + lam[2] : lam[2] + lam[4];
  const Scalar sum_sq = s1 * s1 + s2 * s2;
  return c1 * c1 * (s1 * s1 * s1 * s1 + s2 * s2 * s2 * s2) / (sum_sq * sum_sq);
}

// ---------------------------------------------------------------------------
// Energy method: second variation of F-combinations with Casimir multipliers
// ---------------------------------------------------------------------------

/// Signed selection of generator integrals, e.g. F1 + F5 or F1 - F4.
struct GeneratorCombo {
  std::array<int, 5> coeff;  // coefficient of F_{i+1}, each in {-1, 0, +1}

  static GeneratorCombo plus(int i, int j) {
    GeneratorCombo c{};
    c.coeff[i - 1] = +1;
    c.coeff[j - 1] = +1;
    return c;
  }
  static GeneratorCombo minus(int i, int j) {
    GeneratorCombo c{};
    c.coeff[i - 1] = +1;
    c.coeff[j - 1] = -1;
    return c;
  }

  std::string label() const {
    std::string out;
    for (int i = 0; i < 5; ++i) {
      if (coeff[i] == 0) continue;
      if (!out.empty() || coeff[i] < 0) out += (coeff[i] > 0) ? "+" : "-";
      out += "F" + std::to_string(i + 1);
    }
    return out;
  }
};

/// Coordinate Hessian of the quartic Casimir C2 = 1/8 tr(M^4) at m:
/// H[p][q] = 1/2 [tr(M^2 E_p E_q) + tr(M E_p M E_q) + tr(M^2 E_q E_p)].
template <typename Scalar>
Matrix10<Scalar> hessian_casimir_c2(const SkewMatrix<Scalar>& m) {
  if (m.dim() != 5)
    throw std::invalid_argument("hessian_casimir_c2: requires a 5 x 5 state");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense md = m.dense();
  const Dense m2 = md * md;
  std::array<Dense, kCoordCount> e;
  for (int p = 0; p < kCoordCount; ++p) e[p] = basis_element<Scalar>(p + 1).dense();

  Matrix10<Scalar> h;
  for (int p = 0; p < kCoordCount; ++p)
    for (int q = p; q < kCoordCount; ++q) {
      const Scalar value = Scalar(0.5) * ((m2 * e[p] * e[q]).trace() +
                                          (md * e[p] * md * e[q]).trace() +
                                          (m2 * e[q] * e[p]).trace());
      h(p, q) = value;
      h(q, p) = value;
    }
  return h;
}

/// Coordinate Hessian of a generator combination: diagonal, since each F_i
/// is a weighted sum of squared coordinates.
template <typename Scalar>
Matrix10<Scalar> hessian_generator_combo(const GeneratorCombo& combo,
                                         const InertiaSpec<Scalar>& inertia) {
  if (inertia.dim() != 5)
    throw std::invalid_argument("hessian_generator_combo: requires a 5-dimensional inertia spec");
  const auto& lam = inertia.lambdas();
  Matrix10<Scalar> h = Matrix10<Scalar>::Zero();
  for (int p = 0; p < kCoordCount; ++p) {
    const CoordSlot& slot = kCoordSlots[p];
    for (const int w : {slot.row, slot.col}) {
      if (combo.coeff[w] == 0) continue;
      const int other = (w == slot.row) ? slot.col : slot.row;
      h(p, p) += Scalar(2 * combo.coeff[w]) / (lam[w] * lam[w] - lam[other] * lam[other]);
    }
  }
  return h;
}

/// Certificate produced by the energy method at one equilibrium.
template <typename Scalar>
struct EnergyCertificate {
  GeneratorCombo combo;
  Scalar m = Scalar(0);  // multiplier of C1
  Scalar n = Scalar(0);  // multiplier of C2
  bool multipliers_found = false;
  Scalar gradient_residual = Scalar(0);  // ||dG|| after solving for (m, n)
  std::array<Scalar, 8> minors{};        // leading principal minors in basis order
  std::array<Scalar, 8> hessian_eigenvalues{};
  int definiteness = 0;  // +1 positive definite, -1 negative definite, 0 indefinite
};

using EnergyCertificated = EnergyCertificate<double>;

/// Second-variation test with G = sum coeff_i F_i + m C1 + n C2: solves
/// dG(eq) = 0 for the multipliers (least squares over the two Casimir
/// gradients), restricts the Hessian of G to the given tangent basis, and
/// reports minors, eigenvalues, and definiteness.
template <typename Scalar>
EnergyCertificate<Scalar> energy_method_test(const SkewMatrix<Scalar>& m_eq,
                                             const GeneratorCombo& combo,
                                             const InertiaSpec<Scalar>& inertia,
                                             const Eigen::Matrix<Scalar, 10, 8>& basis) {
  if (m_eq.dim() != 5)
    throw std::invalid_argument("energy_method_test: requires a 5 x 5 state");
  inertia.require_strictly_decreasing();

  EnergyCertificate<Scalar> cert;
  cert.combo = combo;

  // Gradient of the F-combination and of the two Casimirs, in coordinates.
  Coordinates10<Scalar> grad_f = Coordinates10<Scalar>::Zero();
  for (int i = 0; i < 5; ++i) {
    if (combo.coeff[i] == 0) continue;
    grad_f += Scalar(combo.coeff[i]) *
              matrix_to_coords(grad_generator_integral(m_eq, inertia, i + 1));
  }
  Eigen::Matrix<Scalar, 10, 2> casimir_grads;
  casimir_grads.col(0) = matrix_to_coords(grad_casimir_c1(m_eq));
  casimir_grads.col(1) = matrix_to_coords(grad_casimir_c2(m_eq));

  const Eigen::ColPivHouseholderQR<Eigen::Matrix<Scalar, 10, 2>> qr(casimir_grads);
  if (qr.rank() < 2) {
    cert.multipliers_found = false;
    return cert;  // Casimir gradients dependent: no multiplier pair exists
  }
  const Eigen::Matrix<Scalar, 2, 1> mn = qr.solve((-grad_f).eval());
  cert.m = mn[0];
  cert.n = mn[1];
  cert.multipliers_found = true;
  cert.gradient_residual = (grad_f + casimir_grads * mn).norm();

  // Hessian of G in coordinates, restricted to the tangent basis.
  Matrix10<Scalar> hess = hessian_generator_combo(combo, inertia);
  hess += cert.m * Matrix10<Scalar>::Identity();
  hess += cert.n * hessian_casimir_c2(m_eq);
  const Eigen::Matrix<Scalar, 8, 8> restricted = basis.transpose() * hess * basis;

  for (int size = 1; size <= 8; ++size)
    cert.minors[size - 1] = restricted.topLeftCorner(size, size).determinant();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, 8, 8>> es(restricted);
  for (int i = 0; i < 8; ++i) cert.hessian_eigenvalues[i] = es.eigenvalues()[i];
  const Scalar margin = Scalar(1e-10) * restricted.norm();
  if (es.eigenvalues()[0] > margin)
    cert.definiteness = +1;
  else if (es.eigenvalues()[7] < -margin)
    cert.definiteness = -1;
  else
    cert.definiteness = 0;
  return cert;
}

/// The prescribed generator combination for a (family, slot-class) cell, if
/// one is known.  Each listed combination certifies its cell (definite
/// restricted second variation) on every tested orbit: 40 random strictly
/// ordered inertia spectra with random regular Weyl values, plus the
/// reference fixture.  Cells without an entry have no known certificate and
/// are left to the open/unstable verdicts of the pipeline.
inline std::optional<GeneratorCombo> prescribed_combo(int k, SlotClass cls) {
  switch (k) {
    case 1:
      return cls == SlotClass::kAB ? GeneratorCombo::plus(1, 5) : GeneratorCombo::minus(4, 5);
    case 2:
      if (cls == SlotClass::kAB) return GeneratorCombo::plus(1, 4);
      return std::nullopt;
    case 8:
      return cls == SlotClass::kAB ? GeneratorCombo::minus(1, 2) : GeneratorCombo::plus(1, 5);
    case 9:
      if (cls == SlotClass::kAB) return GeneratorCombo::minus(3, 5);
      return std::nullopt;
    case 12:
      return cls == SlotClass::kAB ? GeneratorCombo::plus(2, 3) : GeneratorCombo::plus(3, 4);
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Classifier
// ---------------------------------------------------------------------------

enum class StabilityStatus { kUnstable, kNonlinearlyStable, kOpen };

inline const char* status_label(StabilityStatus status) {
  switch (status) {
    case StabilityStatus::kUnstable: return "Unstable";
    case StabilityStatus::kNonlinearlyStable: return "NonlinearlyStable";
    case StabilityStatus::kOpen: return "Open";
  }
  throw std::logic_error("status_label: invalid status");
}

template <typename Scalar>
struct StabilityVerdict {
  int family = 0;
  WeylSlot slot = WeylSlot::kAB;
  SlotClass slot_class = SlotClass::kAB;
  StabilityStatus status = StabilityStatus::kOpen;
  std::string evidence;
  SpectrumReport<Scalar> spectrum;
  std::optional<EnergyCertificate<Scalar>> certificate;
};

using StabilityVerdictd = StabilityVerdict<double>;

/// Full decision pipeline for one plane-slot equilibrium:
///  1. families 6 and 7, (+-a,+-b) slots: when the side condition fails the
///     quartic degenerates (double zero eigenvalue) and the verdict stays
///     open -- the spectrum is not consulted, since round-off can split the
///     double zero into a spurious real pair;
///  2. an eigenvalue with real part beyond the spectral gate -> Unstable;
///  3. otherwise the prescribed generator combination, if any, is put
///     through the second-variation test; a definite restricted Hessian
///     certifies nonlinear stability;
///  4. everything else remains Open.
template <typename Scalar>
StabilityVerdict<Scalar> classify_equilibrium(const EquilibriumPoint<Scalar>& eq,
                                              const OrbitInvariants<Scalar>& inv,
                                              const InertiaSpec<Scalar>& inertia) {
  const auto* prov = std::get_if<CartanSlotProvenance<Scalar>>(&eq.provenance);
  if (prov == nullptr)
    throw std::invalid_argument(
        "classify_equilibrium: only plane-slot equilibria are classified; continuous-family "
        "points are outside the classifier's scope");
  inertia.require_strictly_decreasing();
  inv.require_regular();

  StabilityVerdict<Scalar> verdict;
  verdict.family = prov->k;
  verdict.slot = prov->slot;
  verdict.slot_class = slot_class(prov->slot);
  verdict.spectrum = restricted_spectrum(eq, inertia);

  std::ostringstream evidence;
  if ((prov->k == 6 || prov->k == 7) && verdict.slot_class == SlotClass::kAB &&
      !special_condition(prov->k, inv, inertia)) {
    verdict.status = StabilityStatus::kOpen;
    evidence << "degenerate quartic: the orbit satisfies the equality case of the side "
             << "condition for family " << prov->k
             << ", so the linearization has a double zero eigenvalue and the stability "
             << "problem remains open";
    verdict.evidence = evidence.str();
    return verdict;
  }

  if (verdict.spectrum.max_real_part > verdict.spectrum.tolerance) {
    verdict.status = StabilityStatus::kUnstable;
    evidence << "eigenvalue with positive real part " << verdict.spectrum.max_real_part
             << " (gate " << verdict.spectrum.tolerance << ")";
    verdict.evidence = evidence.str();
    return verdict;
  }

  if (const auto combo = prescribed_combo(prov->k, verdict.slot_class)) {
    const Eigen::Matrix<Scalar, 10, 8> basis = cartan_complement_basis<Scalar>(prov->k);
    EnergyCertificate<Scalar> cert = energy_method_test(eq.m, *combo, inertia, basis);
    const bool definite = cert.multipliers_found && cert.definiteness != 0;
    verdict.certificate = std::move(cert);
    if (definite) {
      verdict.status = StabilityStatus::kNonlinearlyStable;
      evidence << (verdict.certificate->definiteness > 0 ? "positive" : "negative")
               << " definite second variation of " << combo->label()
               << " + m*C1 + n*C2 on the orbit tangent space";
      verdict.evidence = evidence.str();
      return verdict;
    }
    evidence << "spectrum on the imaginary axis but the prescribed combination "
             << combo->label() << " yields an indefinite certificate; ";
  }

  verdict.status = StabilityStatus::kOpen;
  evidence << "spectrum on the imaginary axis and no definite energy certificate; the "
           << "stability problem remains open";
  verdict.evidence = evidence.str();
  return verdict;
}

/// What the reference classification claims for a (family, slot-class) cell
/// on a regular orbit with strictly ordered moments:
///   kClaimUnstable       -- a growing mode exists on every such orbit;
///   kClaimStable         -- a definite energy certificate exists on every
///                           such orbit;
///   kClaimConditional    -- families 6 and 7, (+-a,+-b) slots: unstable
///                           exactly when the side condition holds, open on
///                           the equality orbit (degenerate quartic);
///   kNoClaim             -- no blanket statement holds: the cell is
///                           genuinely orbit-dependent (growing mode at
///                           generic Weyl ratios, elliptic with no known
///                           certificate in a thin near-degenerate band).
enum class TheoremClaim { kClaimUnstable, kClaimStable, kClaimConditional, kNoClaim };

inline const char* claim_label(TheoremClaim claim) {
  switch (claim) {
    case TheoremClaim::kClaimUnstable: return "Unstable";
    case TheoremClaim::kClaimStable: return "NonlinearlyStable";
    case TheoremClaim::kClaimConditional: return "UnstableIfSideCondition";
    case TheoremClaim::kNoClaim: return "NoClaim";
  }
  throw std::logic_error("claim_label: invalid claim");
}

inline TheoremClaim theorem_claim(int k, SlotClass cls) {
  switch (k) {
    case 3: case 4: case 5: case 10: case 11: case 13: case 14: case 15:
      return TheoremClaim::kClaimUnstable;
    case 6: case 7:
      return cls == SlotClass::kAB ? TheoremClaim::kClaimConditional
                                   : TheoremClaim::kClaimUnstable;
    case 1: case 8: case 12:
      return TheoremClaim::kClaimStable;
    case 2: case 9:
      return cls == SlotClass::kAB ? TheoremClaim::kClaimStable : TheoremClaim::kNoClaim;
    default:
      throw std::invalid_argument("theorem_claim: family index must be in 1..15");
  }
}

/// Whether a verdict is consistent with the reference claim for its cell.
/// `special` is the family-6/7 side condition on the orbit in question
/// (ignored elsewhere).  No-claim cells accept Unstable or Open -- the
/// classifier may settle them per orbit -- but never a stability
/// certificate, since none is known to exist.
inline bool verdict_matches_claim(StabilityStatus status, TheoremClaim claim, bool special) {
  switch (claim) {
    case TheoremClaim::kClaimUnstable:
      return status == StabilityStatus::kUnstable;
    case TheoremClaim::kClaimStable:
      return status == StabilityStatus::kNonlinearlyStable;
    case TheoremClaim::kClaimConditional:
      return status == (special ? StabilityStatus::kUnstable : StabilityStatus::kOpen);
    case TheoremClaim::kNoClaim:
      return status != StabilityStatus::kNonlinearlyStable;
  }
  throw std::logic_error("verdict_matches_claim: invalid claim");
}

/// Classify one representative slot per (family, slot-class): 30 verdicts.
/// Within a class the four sign slots share their verdict (the linearization
/// and the certificates depend only on alpha^2 and beta^2).
template <typename Scalar>
std::vector<StabilityVerdict<Scalar>> classification_sweep(const OrbitInvariants<Scalar>& inv,
                                                           const InertiaSpec<Scalar>& inertia) {
  std::vector<StabilityVerdict<Scalar>> verdicts;
  verdicts.reserve(30);
  for (int k = 1; k <= 15; ++k) {
    const auto points = weyl_orbit_points(k, inv);
    for (const WeylSlot slot : {WeylSlot::kAB, WeylSlot::kBA}) {
      const auto& point = points[static_cast<std::size_t>(slot)];
      verdicts.push_back(classify_equilibrium(point, inv, inertia));
    }
  }
  return verdicts;
}

/// Most-unstable direction at a plane-slot equilibrium: the eigenvector of
/// the restricted linearization with the largest real part, mapped back to
/// coordinates and normalized.  Returns nothing when the spectrum has no
/// growing mode.  Useful for seeding perturbation experiments.
template <typename Scalar>
std::optional<std::pair<Coordinates10<Scalar>, Scalar>> unstable_direction(
    int k, Scalar alpha, Scalar beta, const InertiaSpec<Scalar>& inertia) {
  const SkewMatrix<Scalar> m = cartan_point(k, alpha, beta);
  const Eigen::Matrix<Scalar, 10, 8> p = cartan_complement_basis<Scalar>(k);
  const Eigen::Matrix<Scalar, 8, 8> b =
      p.transpose() * rhs_jacobian(m, inertia) * p;
  Eigen::EigenSolver<Eigen::Matrix<Scalar, 8, 8>> solver(b);
  int best = 0;
  for (int i = 1; i < 8; ++i)
    if (solver.eigenvalues()[i].real() > solver.eigenvalues()[best].real()) best = i;
  const Scalar rate = solver.eigenvalues()[best].real();
  if (!(rate > Scalar(1e-8) * b.norm())) return std::nullopt;

  const Eigen::Matrix<std::complex<Scalar>, 8, 1> vec = solver.eigenvectors().col(best);
  Eigen::Matrix<Scalar, 8, 1> real_vec = vec.real();
  if (real_vec.norm() < Scalar(0.5)) real_vec = vec.imag();
  real_vec.normalize();
  Coordinates10<Scalar> direction = p * real_vec;
  return std::make_pair(direction, rate);
}

}  // namespace so5

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "so5/basis.hpp"
#include "so5/equilibria.hpp"
#include "so5/invariants.hpp"
#include "so5/lie_core.hpp"
#include "so5/stability.hpp"
#include "support.hpp"

using namespace so5;
using so5::testing::fd_gradient;
using so5::testing::fd_jacobian;
using so5::testing::make_rng;
using so5::testing::random_coords;
using so5::testing::random_inertia;
using so5::testing::random_weyl_values;

namespace {

InertiaSpecd lambdas54321() {
  Eigen::VectorXd l(5);
  l << 5.0, 4.0, 3.0, 2.0, 1.0;
  return InertiaSpecd{l};
}

constexpr double kFixtureC1 = 2.5;
constexpr double kFixtureC2 = 4.25;

/// Central finite-difference Hessian of a scalar function of 10 coordinates.
template <typename F>
Matrix10d fd_hessian(const F& f, const Coordinates10d& c, double h = 1e-4) {
  Matrix10d hess;
  for (int p = 0; p < kCoordCount; ++p)
    for (int q = 0; q < kCoordCount; ++q) {
      Coordinates10d cpp = c, cpm = c, cmp = c, cmm = c;
      cpp[p] += h; cpp[q] += h;
      cpm[p] += h; cpm[q] -= h;
      cmp[p] -= h; cmp[q] += h;
      cmm[p] -= h; cmm[q] -= h;
      hess(p, q) = (f(cpp) - f(cpm) - f(cmp) + f(cmm)) / (4.0 * h * h);
    }
  return hess;
}

/// Frobenius norm of the 8x8 restriction used for relative gates.
double restricted_norm(int k, double alpha, double beta, const InertiaSpecd& inertia) {
  const auto p = cartan_complement_basis<double>(k);
  return (p.transpose() * rhs_jacobian(cartan_point(k, alpha, beta), inertia) * p).norm();
}

}  // namespace

TEST_CASE("state linearization: finite differences, kernel, and rank") {
  const InertiaSpecd inertia = lambdas54321();

  // Quadratic vector field: the linearization at zero vanishes.
  CHECK(rhs_jacobian(SkewMatrixd(5), inertia).norm() == 0.0);

  // Analytic columns against central finite differences at random states.
  auto rng = make_rng(501);
  for (int trial = 0; trial < 10; ++trial) {
    const Coordinates10d c = random_coords(rng, 1.5);
    const Matrix10d analytic = rhs_jacobian(coords_to_matrix(c), inertia);
    const Matrix10d numeric =
        fd_jacobian([&](const Coordinates10d& x) { return rhs_coordinate_path(x, inertia); }, c);
    CHECK((analytic - numeric).norm() < 1e-6);
  }

  // At a plane equilibrium the plane directions are in the kernel and the
  // rank cannot exceed 8 (two Casimir normal directions are also killed).
  const Matrix10d a = rhs_jacobian(cartan_point(1, 2.0, 1.0), inertia);
  CHECK((a * Coordinates10d::Unit(2)).norm() == 0.0);
  CHECK((a * Coordinates10d::Unit(5)).norm() == 0.0);
  Eigen::FullPivLU<Matrix10d> lu(a);
  lu.setThreshold(1e-10);
  CHECK(lu.rank() <= 8);
}

TEST_CASE("orbit tangent basis: orthonormality and casimir orthogonality") {
  auto rng = make_rng(502);
  for (int trial = 0; trial < 50; ++trial) {
    const Coordinates10d c = random_coords(rng, 1.0);
    const SkewMatrixd m = coords_to_matrix(c);
    const auto basis = orbit_tangent_basis(m);
    CHECK((basis.transpose() * basis - Eigen::Matrix<double, 8, 8>::Identity()).norm() < 1e-13);

    const Coordinates10d g1 = matrix_to_coords(grad_casimir_c1(m));
    const Coordinates10d g2 = matrix_to_coords(grad_casimir_c2(m));
    CHECK((basis.transpose() * g1).norm() < 1e-12 * std::max(1.0, g1.norm()));
    CHECK((basis.transpose() * g2).norm() < 1e-12 * std::max(1.0, g2.norm()));
  }
}

TEST_CASE("orbit tangent basis: plane-point span and degeneracy refusal") {
  // At the family-1 point the tangent space is exactly the span of the
  // eight non-plane coordinate directions.
  const SkewMatrixd m = cartan_point(1, 2.0, 1.0);
  const auto p = orbit_tangent_basis(m);
  const auto s = cartan_complement_basis<double>(1);
  CHECK((p * p.transpose() - s * s.transpose()).norm() < 1e-12);

  // A rank-two plane point (beta = 0) has dependent Casimir differentials.
  const SkewMatrixd degenerate = cartan_point(1, 1.0, 0.0);
  CHECK_THROWS_AS(orbit_tangent_basis(degenerate), std::domain_error);
}

TEST_CASE("cartan complement basis: ordered coordinate selection") {
  for (int k = 1; k <= 15; ++k) {
    const auto s = cartan_complement_basis<double>(k);
    CHECK((s.transpose() * s - Eigen::Matrix<double, 8, 8>::Identity()).norm() == 0.0);
    const CartanFamily& fam = cartan_family(k);
    int col = 0;
    for (int q = 0; q < kCoordCount; ++q) {
      if (q == fam.coord_a || q == fam.coord_b) continue;
      CHECK(s(q, col) == 1.0);
      ++col;
    }
    CHECK(col == 8);
  }
}

TEST_CASE("factor coefficients: exact fixture integers at family 1") {
  const InertiaSpecd inertia = lambdas54321();
  const auto f = factor_coefficients(1, 2.0, 1.0, inertia);
  CHECK(f.u == 300.0);
  CHECK(f.u_prime == 2.0);
  CHECK(f.v == 2430.0);
  CHECK(f.v_prime == 48.0);
  CHECK(f.w == 9644670000.0);
  CHECK(f.w_pprime == 4332.0);
  CHECK(f.w_prime == 0.0);  // no closed form; filled by the spectrum report
}

TEST_CASE("factor coefficients: positivity of U, V, W and ordering guard") {
  auto rng = make_rng(503);
  for (int trial = 0; trial < 20; ++trial) {
    const InertiaSpecd inertia = random_inertia(rng, 5, true);
    const auto [a, b] = random_weyl_values(rng);
    for (int k = 1; k <= 15; ++k) {
      const auto f = factor_coefficients(k, a, b, inertia);
      CHECK(f.u > 0.0);
      CHECK(f.v > 0.0);
      CHECK(f.w > 0.0);
    }
  }

  // Unordered moments are rejected: every sign argument assumes the strict
  // descending order.
  Eigen::VectorXd shuffled(5);
  shuffled << 3.0, 5.0, 4.0, 2.0, 1.0;
  const InertiaSpecd unordered{shuffled};
  CHECK_THROWS_AS(factor_coefficients(1, 2.0, 1.0, unordered), std::invalid_argument);
}

TEST_CASE("factor signs at fixture: stable, side-condition, and unstable families") {
  const InertiaSpecd inertia = lambdas54321();
  const double a = 2.0, b = 1.0;
  // Families 6 and 7 carry a non-positive quartic constant term; at generic
  // orbits it is strictly negative for both slot classes.
  for (int k : {6, 7}) {
    CHECK(factor_coefficients(k, a, b, inertia).w_pprime < 0.0);
    CHECK(factor_coefficients(k, b, a, inertia).w_pprime < 0.0);
  }
  // The eight always-unstable families have a negative quadratic
  // coefficient for either slot class.
  for (int k : {3, 4, 5, 10, 11, 13, 14, 15}) {
    const auto ab = factor_coefficients(k, a, b, inertia);
    const auto ba = factor_coefficients(k, b, a, inertia);
    CHECK((ab.u_prime < 0.0 || ab.v_prime < 0.0));
    CHECK((ba.u_prime < 0.0 || ba.v_prime < 0.0));
  }
  // The nonlinearly stable families have every closed-form coefficient
  // positive at the (a,b)-type slots.
  for (int k : {1, 2, 8, 9, 12}) {
    const auto f = factor_coefficients(k, a, b, inertia);
    CHECK(f.u_prime > 0.0);
    CHECK(f.v_prime > 0.0);
    CHECK(f.w_pprime > 0.0);
  }
}

TEST_CASE("restricted spectrum: fixture roots at the family-1 equilibrium") {
  const InertiaSpecd inertia = lambdas54321();
  const auto report = restricted_spectrum(1, 2.0, 1.0, inertia);

  CHECK(report.matched);
  CHECK(report.u_match_error <= 1e-10);
  CHECK(report.v_match_error <= 1e-10);
  CHECK(report.quartic_product_error <= 1e-8);
  CHECK(report.pairing_error <= 1e-12);
  CHECK(report.max_real_part <= report.tolerance);  // spectrally stable point

  // Two closed-form quadratic pairs: +-i sqrt(2/300), +-i sqrt(48/2430).
  const double r1 = std::sqrt(2.0 / 300.0);
  const double r2 = std::sqrt(48.0 / 2430.0);
  int hits_r1 = 0, hits_r2 = 0;
  for (const auto& ev : report.eigenvalues) {
    CHECK(std::abs(ev.real()) <= report.tolerance);
    if (std::abs(std::abs(ev.imag()) - r1) < 1e-10) ++hits_r1;
    if (std::abs(std::abs(ev.imag()) - r2) < 1e-10) ++hits_r2;
  }
  CHECK(hits_r1 == 2);
  CHECK(hits_r2 == 2);

  // Product identity for the quartic factor and the recovered middle
  // coefficient (real, negative for an elliptic block).
  CHECK(report.factors.w_pprime / report.factors.w == doctest::Approx(4332.0 / 9644670000.0));
  CHECK(report.factors.w_prime != 0.0);
}

TEST_CASE("restricted spectrum: closed forms across all families and random orbits") {
  auto rng = make_rng(504);
  for (int trial = 0; trial < 20; ++trial) {
    const InertiaSpecd inertia = random_inertia(rng, 5, true);
    const auto [a, b] = random_weyl_values(rng);
    for (int k = 1; k <= 15; ++k) {
      CAPTURE(k);
      CAPTURE(trial);
      const auto ab = restricted_spectrum(k, a, b, inertia);
      CHECK(ab.matched);
      CHECK(ab.pairing_error <= 1e-8 * std::max(1.0, restricted_norm(k, a, b, inertia)));
      const auto ba = restricted_spectrum(k, b, a, inertia);
      CHECK(ba.matched);
    }
  }
}

TEST_CASE("restricted spectrum: always-unstable families show a real growing root") {
  auto rng = make_rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const InertiaSpecd inertia = random_inertia(rng, 5, true);
    const auto [a, b] = random_weyl_values(rng);
    for (int k : {3, 4, 5, 10, 11, 13, 14, 15}) {
      CHECK(restricted_spectrum(k, a, b, inertia).max_real_part >
            restricted_spectrum(k, a, b, inertia).tolerance);
      CHECK(restricted_spectrum(k, b, a, inertia).max_real_part >
            restricted_spectrum(k, b, a, inertia).tolerance);
    }
    // Families 6/7: the (b,a)-type slots are unstable on every regular orbit.
    for (int k : {6, 7}) {
      CHECK(restricted_spectrum(k, b, a, inertia).max_real_part >
            restricted_spectrum(k, b, a, inertia).tolerance);
    }
  }
}

TEST_CASE("restricted spectrum: provenance overload rejects continuous points") {
  const InertiaSpecd inertia = lambdas54321();
  const ContinuousFamily<double> fam = continuous_family(1, inertia);
  EquilibriumPoint<double> point{fam.at(Eigen::Vector3d(1.0, 0.5, -0.25)),
                                 ContinuousProvenance<double>{1, Eigen::Vector3d(1.0, 0.5, -0.25)}};
  CHECK_THROWS_AS(restricted_spectrum(point, inertia), std::invalid_argument);
}

TEST_CASE("special condition: fixture arithmetic and the equality orbit") {
  const InertiaSpecd inertia = lambdas54321();
  const OrbitInvariantsd inv{kFixtureC1, kFixtureC2};

  // Family 6: 6.25 * (6^4 + 8^4) = 33700 vs 4.25 * (36 + 64)^2 = 42500.
  CHECK(special_condition(6, inv, inertia));
  // Family 7: 6.25 * (6^4 + 4^4) = 9700 vs 4.25 * (36 + 16)^2 = 11492.
  CHECK(special_condition(7, inv, inertia));
  CHECK_THROWS_AS(special_condition(5, inv, inertia), std::invalid_argument);

  for (int k : {6, 7}) {
    const double c2_eq = special_condition_equality_c2(k, kFixtureC1, inertia);
    const OrbitInvariantsd degenerate{kFixtureC1, c2_eq};
    CHECK(degenerate.is_regular());  // the equality orbit is still regular
    CHECK_FALSE(special_condition(k, degenerate, inertia));
    // The quartic constant term vanishes there for the (a,b)-type slots.
    const auto [a, b] = weyl_ab(degenerate);
    const auto f = factor_coefficients(k, a, b, inertia);
    CHECK(std::abs(f.w_pprime) < 1e-9 * f.w);
  }
}

TEST_CASE("casimir and generator hessians match finite differences") {
  auto rng = make_rng(506);
  const InertiaSpecd inertia = lambdas54321();
  for (int trial = 0; trial < 5; ++trial) {
    const Coordinates10d c = random_coords(rng, 1.2);
    const SkewMatrixd m = coords_to_matrix(c);

    const Matrix10d analytic_c2 = hessian_casimir_c2(m);
    const Matrix10d numeric_c2 = fd_hessian(
        [&](const Coordinates10d& x) { return casimir_c2(coords_to_matrix(x)); }, c);
    CHECK((analytic_c2 - numeric_c2).norm() < 1e-6 * std::max(1.0, analytic_c2.norm()));
    CHECK((analytic_c2 - analytic_c2.transpose()).norm() == 0.0);

    const GeneratorCombo combo =
        (trial % 2 == 0) ? GeneratorCombo::plus(1, 5) : GeneratorCombo::minus(2, 4);
    const Matrix10d analytic_f = hessian_generator_combo(combo, inertia);
    const Matrix10d numeric_f = fd_hessian(
        [&](const Coordinates10d& x) {
          const SkewMatrixd mm = coords_to_matrix(x);
          double g = 0.0;
          for (int i = 0; i < 5; ++i)
            if (combo.coeff[i] != 0)
              g += combo.coeff[i] * generator_integral(mm, inertia, i + 1);
          return g;
        },
        c);
    CHECK((analytic_f - numeric_f).norm() < 1e-5 * std::max(1.0, analytic_f.norm()));
  }
}

TEST_CASE("energy method: closed-form certificate at the family-1 equilibrium") {
  const InertiaSpecd inertia = lambdas54321();
  const SkewMatrixd m = cartan_point(1, 2.0, 1.0);
  const auto cert = energy_method_test(m, GeneratorCombo::plus(1, 5), inertia,
                                       cartan_complement_basis<double>(1));

  CHECK(cert.combo.label() == "F1+F5");
  CHECK(cert.multipliers_found);
  // Closed forms: m = 2 b^2 / ((l1^2 - l2^2)(a^2 - b^2)) = 2/27 and
  // n = -2 / ((l1^2 - l2^2)(a^2 - b^2)) = -2/27.
  CHECK(cert.m == doctest::Approx(2.0 / 27.0).epsilon(1e-14));
  CHECK(cert.n == doctest::Approx(-2.0 / 27.0).epsilon(1e-14));
  CHECK(cert.gradient_residual <= 1e-14);

  CHECK(cert.minors[0] == doctest::Approx(-8.0 / 27.0).epsilon(1e-14));
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(cert.minors[i] * ((i % 2 == 0) ? -1.0 : 1.0) > 0.0);  // (-,+,-,+,-,+,-,+)
  }
  CHECK(cert.definiteness == -1);
}

TEST_CASE("energy method: closed-form multipliers across random orbits") {
  auto rng = make_rng(507);
  for (int trial = 0; trial < 20; ++trial) {
    const InertiaSpecd inertia = random_inertia(rng, 5, true);
    const auto [a, b] = random_weyl_values(rng);
    const SkewMatrixd m = cartan_point(1, a, b);
    const auto cert = energy_method_test(m, GeneratorCombo::plus(1, 5), inertia,
                                         cartan_complement_basis<double>(1));
    REQUIRE(cert.multipliers_found);
    const auto& lam = inertia.lambdas();
    const double denom = (lam[0] * lam[0] - lam[1] * lam[1]) * (a * a - b * b);
    CHECK(cert.m == doctest::Approx(2.0 * b * b / denom).epsilon(1e-10));
    CHECK(cert.n == doctest::Approx(-2.0 / denom).epsilon(1e-10));
    CHECK(cert.gradient_residual <= 1e-12 * std::max(1.0, m.norm()));

    // The alternating minor pattern holds on every regular orbit.
    for (int i = 0; i < 8; ++i) CHECK(cert.minors[i] * ((i % 2 == 0) ? -1.0 : 1.0) > 0.0);
    CHECK(cert.definiteness == -1);
  }
}

TEST_CASE("energy method: prescribed combos certify, wrong combos do not") {
  const InertiaSpecd inertia = lambdas54321();
  const OrbitInvariantsd inv{kFixtureC1, kFixtureC2};
  const auto [a, b] = weyl_ab(inv);

  // The (b,a)-type slot of family 1 is certified by F4-F5.
  const auto combo_ba = prescribed_combo(1, SlotClass::kBA);
  REQUIRE(combo_ba.has_value());
  CHECK(combo_ba->label() == "F4-F5");
  const auto ba_cert = energy_method_test(cartan_point(1, b, a), *combo_ba, inertia,
                                          cartan_complement_basis<double>(1));
  CHECK(ba_cert.multipliers_found);
  CHECK(ba_cert.gradient_residual <= 1e-12);
  CHECK(ba_cert.definiteness != 0);

  // The sum F4+F5 does not certify that slot: its restricted second
  // variation stays indefinite, which is why the difference is prescribed.
  const auto sum_cert = energy_method_test(cartan_point(1, b, a), GeneratorCombo::plus(4, 5),
                                           inertia, cartan_complement_basis<double>(1));
  CHECK(sum_cert.multipliers_found);
  CHECK(sum_cert.definiteness == 0);

  // A combination borrowed from another family fails to certify an
  // unstable equilibrium: the restricted Hessian stays indefinite.
  const auto wrong = energy_method_test(cartan_point(3, a, b), GeneratorCombo::plus(1, 5),
                                        inertia, cartan_complement_basis<double>(3));
  CHECK(wrong.multipliers_found);
  CHECK(wrong.definiteness == 0);
}

TEST_CASE("classifier: catalog verdicts at the fixture orbit") {
  const InertiaSpecd inertia = lambdas54321();
  const OrbitInvariantsd inv{kFixtureC1, kFixtureC2};
  const auto verdicts = classification_sweep(inv, inertia);
  REQUIRE(verdicts.size() == 30);

  const bool special6 = special_condition(6, inv, inertia);
  const bool special7 = special_condition(7, inv, inertia);
  CHECK(special6);
  CHECK(special7);

  for (const auto& verdict : verdicts) {
    const std::string slot_name = slot_class_label(verdict.slot_class);
    CAPTURE(verdict.family);
    CAPTURE(slot_name);
    const bool special = verdict.family == 6   ? special6
                         : verdict.family == 7 ? special7
                                               : false;
    CHECK(verdict_matches_claim(verdict.status,
                                theorem_claim(verdict.family, verdict.slot_class), special));

    // Certificate coherence.
    if (verdict.status == StabilityStatus::kUnstable)
      CHECK(verdict.spectrum.max_real_part > verdict.spectrum.tolerance);
    if (verdict.status == StabilityStatus::kNonlinearlyStable) {
      REQUIRE(verdict.certificate.has_value());
      CHECK(verdict.certificate->definiteness != 0);
      CHECK(verdict.certificate->gradient_residual <= 1e-12);
      double sum_sq = 0.0;
      for (double ev : verdict.certificate->hessian_eigenvalues) sum_sq += ev * ev;
      double min_abs = std::abs(verdict.certificate->hessian_eigenvalues[0]);
      for (double ev : verdict.certificate->hessian_eigenvalues)
        min_abs = std::min(min_abs, std::abs(ev));
      CHECK(min_abs >= 1e-10 * std::sqrt(sum_sq));
    }
    if (verdict.status == StabilityStatus::kOpen)
      CHECK(verdict.evidence.find("open") != std::string::npos);
  }

  // Spot-check every cell of the classification at this orbit.
  auto verdict_of = [&](int k, SlotClass cls) -> const decltype(verdicts)::value_type& {
    for (const auto& v : verdicts)
      if (v.family == k && v.slot_class == cls) return v;
    throw std::logic_error("missing verdict row");
  };
  auto status_of = [&](int k, SlotClass cls) { return verdict_of(k, cls).status; };
  for (int k : {3, 4, 5, 10, 11, 13, 14, 15}) {
    CHECK(status_of(k, SlotClass::kAB) == StabilityStatus::kUnstable);
    CHECK(status_of(k, SlotClass::kBA) == StabilityStatus::kUnstable);
  }
  for (int k : {6, 7}) {
    CHECK(status_of(k, SlotClass::kAB) == StabilityStatus::kUnstable);  // condition holds here
    CHECK(status_of(k, SlotClass::kBA) == StabilityStatus::kUnstable);
  }
  for (int k : {1, 8, 12}) {
    CHECK(status_of(k, SlotClass::kAB) == StabilityStatus::kNonlinearlyStable);
    CHECK(status_of(k, SlotClass::kBA) == StabilityStatus::kNonlinearlyStable);
  }
  CHECK(status_of(2, SlotClass::kAB) == StabilityStatus::kNonlinearlyStable);
  CHECK(status_of(9, SlotClass::kAB) == StabilityStatus::kNonlinearlyStable);

  // The (b,a)-type slots of families 2 and 9 carry no stability claim, and
  // at this orbit the linearization has a genuine growing mode.  Freeze the
  // growth rates so a regression in the restriction or the Jacobian shows up.
  const auto& v2 = verdict_of(2, SlotClass::kBA);
  CHECK(v2.status == StabilityStatus::kUnstable);
  CHECK(v2.spectrum.max_real_part == doctest::Approx(0.102488804252).epsilon(1e-6));
  const auto& v9 = verdict_of(9, SlotClass::kBA);
  CHECK(v9.status == StabilityStatus::kUnstable);
  CHECK(v9.spectrum.max_real_part == doctest::Approx(0.0511052631905).epsilon(1e-6));
}

TEST_CASE("classifier: all four slots of a class share the verdict") {
  const InertiaSpecd inertia = lambdas54321();
  const OrbitInvariantsd inv{kFixtureC1, kFixtureC2};
  for (int k : {1, 3, 6, 9}) {
    const auto points = weyl_orbit_points(k, inv);
    StabilityStatus ab_status = StabilityStatus::kOpen, ba_status = StabilityStatus::kOpen;
    bool first_ab = true, first_ba = true;
    for (const auto& point : points) {
      const auto verdict = classify_equilibrium(point, inv, inertia);
      if (verdict.slot_class == SlotClass::kAB) {
        if (first_ab) { ab_status = verdict.status; first_ab = false; }
        CHECK(verdict.status == ab_status);
      } else {
        if (first_ba) { ba_status = verdict.status; first_ba = false; }
        CHECK(verdict.status == ba_status);
      }
    }
  }
}

TEST_CASE("classifier: degenerate side-condition orbits stay open") {
  const InertiaSpecd inertia = lambdas54321();
  for (int k : {6, 7}) {
    const double c2_eq = special_condition_equality_c2(k, kFixtureC1, inertia);
    const OrbitInvariantsd degenerate{kFixtureC1, c2_eq};
    REQUIRE(degenerate.is_regular());

    const auto points = weyl_orbit_points(k, degenerate);
    const auto ab = classify_equilibrium(points[0], degenerate, inertia);
    CHECK(ab.status == StabilityStatus::kOpen);
    CHECK(ab.evidence.find("degenerate quartic") != std::string::npos);

    // The (b,a)-type slots stay unstable even on the degenerate orbit.
    const auto ba = classify_equilibrium(points[2], degenerate, inertia);
    CHECK(ba.status == StabilityStatus::kUnstable);
  }
}

TEST_CASE("classifier: no-claim slots go open near the degenerate weyl ratio") {
  const InertiaSpecd inertia = lambdas54321();
  // The growing modes at the (b,a)-type slots of families 2 and 9 vanish as
  // the weyl values approach each other.  Just below the transition ratio the
  // spectrum is imaginary, yet no generator combination is definite there, so
  // an honest classifier reports the cell open rather than guessing.
  const OrbitInvariantsd inv = orbit_of_plane_values(1.02, 1.0);
  REQUIRE(inv.is_regular());
  for (int k : {2, 9}) {
    CAPTURE(k);
    const auto points = weyl_orbit_points(k, inv);
    const auto ab = classify_equilibrium(points[0], inv, inertia);
    CHECK(ab.slot_class == SlotClass::kAB);
    CHECK(ab.status == StabilityStatus::kNonlinearlyStable);
    const auto ba = classify_equilibrium(points[2], inv, inertia);
    CHECK(ba.slot_class == SlotClass::kBA);
    CHECK(ba.status == StabilityStatus::kOpen);
    CHECK(ba.evidence.find("remains open") != std::string::npos);
    CHECK(ba.spectrum.max_real_part <= ba.spectrum.tolerance);
  }
}

TEST_CASE("classifier: theorem holds across random ordered moments and orbits") {
  auto rng = make_rng(508);
  for (int trial = 0; trial < 10; ++trial) {
    const InertiaSpecd inertia = random_inertia(rng, 5, true);
    const auto [a, b] = random_weyl_values(rng);
    const OrbitInvariantsd inv = orbit_of_plane_values(a, b);
    const bool special6 = special_condition(6, inv, inertia);
    const bool special7 = special_condition(7, inv, inertia);

    for (const auto& verdict : classification_sweep(inv, inertia)) {
      const std::string slot_name = slot_class_label(verdict.slot_class);
      CAPTURE(trial);
      CAPTURE(verdict.family);
      CAPTURE(slot_name);
      const bool special = verdict.family == 6   ? special6
                           : verdict.family == 7 ? special7
                                                 : false;
      CHECK(verdict_matches_claim(verdict.status,
                                  theorem_claim(verdict.family, verdict.slot_class), special));
      // Every verdict ships checkable evidence of the advertised kind.
      if (verdict.status == StabilityStatus::kUnstable) {
        CHECK(verdict.spectrum.max_real_part > verdict.spectrum.tolerance);
      }
      if (verdict.status == StabilityStatus::kNonlinearlyStable) {
        REQUIRE(verdict.certificate.has_value());
        CHECK(verdict.certificate->definiteness != 0);
        CHECK(verdict.certificate->gradient_residual <=
              1e-12 * std::max(1.0, std::abs(a) + std::abs(b)));
      }
      if (verdict.status == StabilityStatus::kOpen) {
        CHECK(verdict.evidence.find("open") != std::string::npos);
      }
    }
  }
}

TEST_CASE("classifier: rejects continuous-family points") {
  const InertiaSpecd inertia = lambdas54321();
  const OrbitInvariantsd inv{kFixtureC1, kFixtureC2};
  const ContinuousFamily<double> fam = continuous_family(4, inertia);
  EquilibriumPoint<double> point{fam.at(Eigen::Vector3d(0.3, 0.2, 0.1)),
                                 ContinuousProvenance<double>{4, Eigen::Vector3d(0.3, 0.2, 0.1)}};
  CHECK_THROWS_AS(classify_equilibrium(point, inv, inertia), std::invalid_argument);
}

TEST_CASE("unstable direction: growing mode at an unstable slot, none at a stable one") {
  const InertiaSpecd inertia = lambdas54321();

  const auto grow = unstable_direction(3, 2.0, 1.0, inertia);
  REQUIRE(grow.has_value());
  const auto& [direction, rate] = *grow;
  CHECK(rate > 0.0);
  CHECK(direction.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // The direction is a genuine eigenvector of the full linearization.
  const Matrix10d a = rhs_jacobian(cartan_point(3, 2.0, 1.0), inertia);
  CHECK((a * direction - rate * direction).norm() < 1e-8 * std::max(1.0, a.norm()));

  CHECK_FALSE(unstable_direction(1, 2.0, 1.0, inertia).has_value());
}

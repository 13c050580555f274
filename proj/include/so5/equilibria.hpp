#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "so5/basis.hpp"
#include "so5/inertia.hpp"
#include "so5/invariants.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

/// Values of the two Casimirs pinning an adjoint orbit.  An orbit is regular
/// when c1 > 0, c2 > 0 and 2 c2 > c1^2 > c2; exactly then the orbit meets
/// each Cartan plane in the eight Weyl points built from
///   a = sqrt(c1 + sqrt(2 c2 - c1^2)),  b = sqrt(c1 - sqrt(2 c2 - c1^2)),
/// with a > b > 0.
template <typename Scalar>
struct OrbitInvariants {
  Scalar c1;
  Scalar c2;

  bool is_regular() const {
    return c1 > Scalar(0) && c2 > Scalar(0) && Scalar(2) * c2 > c1 * c1 && c1 * c1 > c2;
  }

  void require_regular() const {
    std::ostringstream msg;
    if (!(c1 > Scalar(0)))
      msg << "orbit is not regular: c1 = " << c1 << " violates c1 > 0";
    else if (!(c2 > Scalar(0)))
      msg << "orbit is not regular: c2 = " << c2 << " violates c2 > 0";
    else if (!(Scalar(2) * c2 > c1 * c1))
      msg << "orbit is not regular: (c1, c2) = (" << c1 << ", " << c2
          << ") violates 2*c2 > c1^2 (this would force a = b)";
    else if (!(c1 * c1 > c2))
      msg << "orbit is not regular: (c1, c2) = (" << c1 << ", " << c2
          << ") violates c1^2 > c2 (this would force b = 0)";
    else
      return;
    throw std::domain_error(msg.str());
  }
};

using OrbitInvariantsd = OrbitInvariants<double>;

/// Weyl values (a, b) of a regular orbit, a > b > 0.
template <typename Scalar>
std::pair<Scalar, Scalar> weyl_ab(const OrbitInvariants<Scalar>& inv) {
  inv.require_regular();
  const Scalar s = std::sqrt(Scalar(2) * inv.c2 - inv.c1 * inv.c1);
  return {std::sqrt(inv.c1 + s), std::sqrt(inv.c1 - s)};
}

/// Orbit invariants of the Cartan point with plane values (alpha, beta):
/// c1 = (alpha^2 + beta^2)/2, c2 = (alpha^4 + beta^4)/4.
template <typename Scalar>
OrbitInvariants<Scalar> orbit_of_plane_values(Scalar alpha, Scalar beta) {
  const Scalar a2 = alpha * alpha, b2 = beta * beta;
  return {(a2 + b2) / Scalar(2), (a2 * a2 + b2 * b2) / Scalar(4)};
}

// ---------------------------------------------------------------------------
// Weyl slots
// ---------------------------------------------------------------------------

/// The eight points of a regular orbit inside one Cartan plane, indexed in
/// the fixed order (a,b), (-a,-b), (b,a), (-b,-a), (-a,b), (a,-b), (b,-a),
/// (-b,a).  "Slot class" groups the four sign choices of (a,b) against the
/// four of (b,a); the linearized spectrum only depends on the class.
enum class WeylSlot : int {
  kAB = 0,
  kNegANegB = 1,
  kBA = 2,
  kNegBNegA = 3,
  kNegAB = 4,
  kANegB = 5,
  kBNegA = 6,
  kNegBA = 7,
};

enum class SlotClass { kAB, kBA };

inline constexpr std::array<WeylSlot, 8> kWeylSlots = {
    WeylSlot::kAB,     WeylSlot::kNegANegB, WeylSlot::kBA,    WeylSlot::kNegBNegA,
    WeylSlot::kNegAB,  WeylSlot::kANegB,    WeylSlot::kBNegA, WeylSlot::kNegBA,
};

inline const char* slot_label(WeylSlot slot) {
  switch (slot) {
    case WeylSlot::kAB: return "a,b";
    case WeylSlot::kNegANegB: return "-a,-b";
    case WeylSlot::kBA: return "b,a";
    case WeylSlot::kNegBNegA: return "-b,-a";
    case WeylSlot::kNegAB: return "-a,b";
    case WeylSlot::kANegB: return "a,-b";
    case WeylSlot::kBNegA: return "b,-a";
    case WeylSlot::kNegBA: return "-b,a";
  }
  throw std::logic_error("slot_label: invalid slot");
}

inline SlotClass slot_class(WeylSlot slot) {
  switch (slot) {
    case WeylSlot::kAB:
    case WeylSlot::kNegANegB:
    case WeylSlot::kNegAB:
    case WeylSlot::kANegB:
      return SlotClass::kAB;
    default:
      return SlotClass::kBA;
  }
}

inline const char* slot_class_label(SlotClass cls) {
  return cls == SlotClass::kAB ? "a,b" : "b,a";
}

/// The (first, second) plane values of a slot given the Weyl values (a, b).
template <typename Scalar>
std::pair<Scalar, Scalar> slot_values(WeylSlot slot, Scalar a, Scalar b) {
  switch (slot) {
    case WeylSlot::kAB: return {a, b};
    case WeylSlot::kNegANegB: return {-a, -b};
    case WeylSlot::kBA: return {b, a};
    case WeylSlot::kNegBNegA: return {-b, -a};
    case WeylSlot::kNegAB: return {-a, b};
    case WeylSlot::kANegB: return {a, -b};
    case WeylSlot::kBNegA: return {b, -a};
    case WeylSlot::kNegBA: return {-b, a};
  }
  throw std::logic_error("slot_values: invalid slot");
}

// ---------------------------------------------------------------------------
// Cartan families
// ---------------------------------------------------------------------------

/// One of the fifteen coordinate-type Cartan planes.  The plane point with
/// values (alpha, beta) places alpha and beta into two fixed coordinates
/// with fixed signs; span_1/span_2 are the (1-based) basis elements of the
/// plane as conventionally listed.
struct CartanFamily {
  int k;        // 1..15
  int span_1;   // basis element indices of the plane
  int span_2;
  int coord_a;  // 0-based coordinate receiving alpha
  int sign_a;
  int coord_b;  // 0-based coordinate receiving beta
  int sign_b;
};

inline const CartanFamily& cartan_family(int k) {
  // alpha rides the first span element and beta the second, each with the
  // chart's sign for that coordinate.  The closed-form spectra and the
  // slot-class stability results depend on this pairing, so it is fixed here
  // once and cross-checked numerically in the stability tests.
  static constexpr std::array<CartanFamily, 15> families = {{
      {1, 3, 6, /*x3*/ 2, -1, /*y3*/ 5, +1},
      {2, 6, 8, /*y3*/ 5, -1, /*z2*/ 7, +1},
      {3, 6, 7, /*y3*/ 5, -1, /*z1*/ 6, +1},
      {4, 5, 7, /*y2*/ 4, +1, /*z1*/ 6, +1},
      {5, 1, 7, /*x1*/ 0, +1, /*z1*/ 6, +1},
      {6, 2, 5, /*x2*/ 1, +1, /*y2*/ 4, -1},
      {7, 5, 9, /*y2*/ 4, +1, /*z3*/ 8, -1},
      {8, 1, 10, /*x1*/ 0, -1, /*z4*/ 9, -1},
      {9, 1, 4, /*x1*/ 0, +1, /*y1*/ 3, +1},
      {10, 2, 8, /*x2*/ 1, +1, /*z2*/ 7, -1},
      {11, 4, 8, /*y1*/ 3, +1, /*z2*/ 7, -1},
      {12, 3, 10, /*x3*/ 2, -1, /*z4*/ 9, +1},
      {13, 3, 9, /*x3*/ 2, -1, /*z3*/ 8, -1},
      {14, 4, 9, /*y1*/ 3, +1, /*z3*/ 8, -1},
      {15, 2, 10, /*x2*/ 1, +1, /*z4*/ 9, +1},
  }};
  if (k < 1 || k > 15) throw std::invalid_argument("cartan_family: index must be in 1..15");
  return families[k - 1];
}

/// Coordinates of the plane point M^k_{alpha,beta}.
template <typename Scalar>
Coordinates10<Scalar> cartan_point_coords(int k, Scalar alpha, Scalar beta) {
  const CartanFamily& fam = cartan_family(k);
  Coordinates10<Scalar> c = Coordinates10<Scalar>::Zero();
  c[fam.coord_a] = Scalar(fam.sign_a) * alpha;
  c[fam.coord_b] = Scalar(fam.sign_b) * beta;
  return c;
}

template <typename Scalar>
SkewMatrix<Scalar> cartan_point(int k, Scalar alpha, Scalar beta) {
  return coords_to_matrix(cartan_point_coords(k, alpha, beta));
}

/// Provenance of an equilibrium produced from a Weyl slot of a Cartan plane.
template <typename Scalar>
struct CartanSlotProvenance {
  int k;
  WeylSlot slot;
  Scalar a;
  Scalar b;
};

/// Provenance of an equilibrium sampled from a continuous family.
template <typename Scalar>
struct ContinuousProvenance {
  int l;
  Eigen::Matrix<Scalar, 3, 1> coefficients;
};

template <typename Scalar>
struct EquilibriumPoint {
  SkewMatrix<Scalar> m;
  std::variant<CartanSlotProvenance<Scalar>, ContinuousProvenance<Scalar>> provenance;
};

using EquilibriumPointd = EquilibriumPoint<double>;

/// The eight Weyl points of family k on a regular orbit, in slot order.
template <typename Scalar>
std::array<EquilibriumPoint<Scalar>, 8> weyl_orbit_points(int k,
                                                          const OrbitInvariants<Scalar>& inv) {
  const auto [a, b] = weyl_ab(inv);
  std::array<EquilibriumPoint<Scalar>, 8> out = {
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}},
      EquilibriumPoint<Scalar>{SkewMatrix<Scalar>(5), {}}};
  for (std::size_t q = 0; q < kWeylSlots.size(); ++q) {
    const WeylSlot slot = kWeylSlots[q];
    const auto [first, second] = slot_values(slot, a, b);
    out[q].m = cartan_point(k, first, second);
    out[q].provenance = CartanSlotProvenance<Scalar>{k, slot, a, b};
  }
  return out;
}

/// All 15 x 8 = 120 Weyl points of a regular orbit.
template <typename Scalar>
std::vector<EquilibriumPoint<Scalar>> all_weyl_points(const OrbitInvariants<Scalar>& inv) {
  std::vector<EquilibriumPoint<Scalar>> out;
  out.reserve(120);
  for (int k = 1; k <= 15; ++k)
    for (auto& p : weyl_orbit_points(k, inv)) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Continuous equilibrium families
// ---------------------------------------------------------------------------

/// A three-dimensional equilibrium subspace: every linear combination of the
/// three spanning matrices is an equilibrium of the vector field.
template <typename Scalar>
struct ContinuousFamily {
  int l;
  std::array<SkewMatrix<Scalar>, 3> span;

  SkewMatrix<Scalar> at(const Eigen::Matrix<Scalar, 3, 1>& u) const {
    SkewMatrix<Scalar> m = span[0] * u[0];
    m += span[1] * u[1];
    m += span[2] * u[2];
    return m;
  }

  /// Orthonormal coordinate basis of the span (the three spanning matrices
  /// have disjoint supports, so normalization suffices).
  Eigen::Matrix<Scalar, 10, 3> orthonormal_basis() const {
    Eigen::Matrix<Scalar, 10, 3> p;
    for (int q = 0; q < 3; ++q) {
      Coordinates10<Scalar> v = matrix_to_coords(span[q]);
      p.col(q) = v / v.norm();
    }
    return p;
  }
};

namespace detail {
struct ContinuousTerm {
  int elem;      // 1-based basis element
  int sum_i;     // the 1/(lambda_i + lambda_j) weight (1-based indices)
  int sum_j;
  int rel_sign;  // +1: fixed plus; -1: fixed minus; +2: upper sign (+/-); -2: lower of (-/+)
};
}  // namespace detail

/// Continuous family l (1..10).  Families come in +/- pairs sharing the same
/// basis elements; odd l takes the upper signs of the defining display.
template <typename Scalar>
ContinuousFamily<Scalar> continuous_family(int l, const InertiaSpec<Scalar>& inertia) {
  if (inertia.dim() != 5)
    throw std::invalid_argument("continuous_family: requires a 5-dimensional inertia spec");
  if (l < 1 || l > 10) throw std::invalid_argument("continuous_family: index must be in 1..10");

  // Each row: the three generators as (E, i+j weight) +/- (E', i'+j' weight);
  // `second_sign_flipped` marks the generators whose sign pattern is the
  // mirrored one (the -/+ slots of the defining display).
  struct Generator {
    int e1, i1, j1;
    int e2, i2, j2;
    bool mirrored;  // true: second term takes -upper/+lower instead of +/-
  };
  struct FamilyPair {
    Generator g[3];
  };
  static constexpr FamilyPair pairs[5] = {
      // s1/s2
      {{{1, 1, 4, 4, 2, 3, false}, {2, 2, 4, 5, 1, 3, false}, {3, 3, 4, 6, 1, 2, false}}},
      // s3/s4
      {{{1, 4, 5, 10, 2, 3, false}, {5, 3, 5, 9, 2, 4, false}, {6, 2, 5, 8, 3, 4, true}}},
      // s5/s6
      {{{2, 4, 5, 10, 1, 3, false}, {6, 1, 5, 7, 3, 4, false}, {4, 3, 5, 9, 1, 4, true}}},
      // s7/s8
      {{{1, 1, 5, 7, 2, 3, false}, {2, 2, 5, 8, 1, 3, false}, {3, 3, 5, 9, 1, 2, false}}},
      // s9/s10
      {{{3, 4, 5, 10, 1, 2, false}, {4, 2, 5, 8, 1, 4, false}, {5, 1, 5, 7, 2, 4, true}}},
  };

  const FamilyPair& pair = pairs[(l - 1) / 2];
  const bool upper = (l % 2) == 1;  // odd l takes the upper sign of +/-
  ContinuousFamily<Scalar> fam{l,
                               {SkewMatrix<Scalar>(5), SkewMatrix<Scalar>(5), SkewMatrix<Scalar>(5)}};
  const auto& lam = inertia.lambdas();
  auto weight = [&](int i, int j) { return Scalar(1) / (lam[i - 1] + lam[j - 1]); };
  for (int q = 0; q < 3; ++q) {
    const Generator& g = pair.g[q];
    Scalar second = upper ? Scalar(1) : Scalar(-1);
    if (g.mirrored) second = -second;
    fam.span[q] = basis_element<Scalar>(g.e1) * weight(g.i1, g.j1) +
                  basis_element<Scalar>(g.e2) * (second * weight(g.i2, g.j2));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Equilibrium predicate and census
// ---------------------------------------------------------------------------

template <typename Scalar>
struct EquilibriumCheck {
  bool ok;
  Scalar residual;   // ||[M, Omega(M)]|| in the Ad-invariant norm
  Scalar threshold;  // tol * max(1, ||M||^2 / min pair sum)
};

/// The vector field is quadratic with curvature 1/(pair sums), so residuals
/// are compared against tol * max(1, ||M||^2 / min_ij (lambda_i + lambda_j)).
template <typename Scalar>
EquilibriumCheck<Scalar> is_equilibrium(const SkewMatrix<Scalar>& m,
                                        const InertiaSpec<Scalar>& inertia,
                                        Scalar tol = Scalar(1e-12)) {
  const Scalar residual = rigid_body_rhs(m, inertia).norm();
  const Scalar scale = std::max(Scalar(1), m.norm() * m.norm() / inertia.min_pair_sum());
  return {residual <= tol * scale, residual, tol * scale};
}

/// Distance (coordinate 2-norm) from c to the Cartan plane t_k.
template <typename Scalar>
Scalar distance_to_cartan(const Coordinates10<Scalar>& c, int k) {
  const CartanFamily& fam = cartan_family(k);
  Coordinates10<Scalar> r = c;
  r[fam.coord_a] = Scalar(0);
  r[fam.coord_b] = Scalar(0);
  return r.norm();
}

/// Distance from c to the continuous family's span.
template <typename Scalar>
Scalar distance_to_continuous(const Coordinates10<Scalar>& c, const ContinuousFamily<Scalar>& fam) {
  const Eigen::Matrix<Scalar, 10, 3> p = fam.orthonormal_basis();
  return (c - p * (p.transpose() * c)).norm();
}

struct CensusOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  double start_scale = 1.0;
  int max_iterations = 200;
  double converge_tol = 1e-13;  // on the residual, scale-normalized
  double match_tol = 1e-8;      // on the distance to the nearest family
};

template <typename Scalar>
struct CensusEntry {
  Coordinates10<Scalar> root;
  Scalar residual;
  bool converged;
  std::string nearest_family;
  Scalar distance;
  bool matched;
};

template <typename Scalar>
struct CensusReport {
  std::vector<CensusEntry<Scalar>> entries;
  int converged = 0;
  int matched = 0;
  int outliers = 0;  // converged roots not within match_tol of any family
};

/// Root-hunting falsification harness for the equilibrium catalog: damped
/// Gauss-Newton on ||rhs||^2 from random starts; every converged root is
/// classified against the 15 Cartan planes and 10 continuous families.
template <typename Scalar>
CensusReport<Scalar> equilibrium_census(const InertiaSpec<Scalar>& inertia,
                                        const CensusOptions& opts = {}) {
  if (inertia.dim() != 5)
    throw std::invalid_argument("equilibrium_census: requires a 5-dimensional inertia spec");
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));

  std::vector<ContinuousFamily<Scalar>> sfams;
  for (int l = 1; l <= 10; ++l) sfams.push_back(continuous_family(l, inertia));

  CensusReport<Scalar> report;
  report.entries.reserve(opts.samples);
  for (int sample = 0; sample < opts.samples; ++sample) {
    Coordinates10<Scalar> c;
    for (int p = 0; p < kCoordCount; ++p) c[p] = Scalar(opts.start_scale) * normal(rng);

    // Damped Gauss-Newton on f(c) = rhs(c).
    Scalar mu(1e-3);
    Coordinates10<Scalar> f = rhs_coordinate_path(c, inertia);
    for (int it = 0; it < opts.max_iterations; ++it) {
      const Scalar scale = std::max(Scalar(1), c.squaredNorm() / inertia.min_pair_sum());
      if (f.norm() <= Scalar(opts.converge_tol) * scale) break;
      const Matrix10<Scalar> jac = rhs_jacobian(coords_to_matrix(c), inertia);
      const Matrix10<Scalar> jtj = jac.transpose() * jac;
      const Coordinates10<Scalar> jtf = jac.transpose() * f;
      bool stepped = false;
      for (int attempt = 0; attempt < 16; ++attempt) {
        Matrix10<Scalar> damped = jtj;
        damped.diagonal().array() += mu;
        const Coordinates10<Scalar> delta = damped.ldlt().solve(Coordinates10<Scalar>(-jtf));
        const Coordinates10<Scalar> cand = c + delta;
        const Coordinates10<Scalar> fcand = rhs_coordinate_path(cand, inertia);
        if (fcand.squaredNorm() < f.squaredNorm()) {
          c = cand;
          f = fcand;
          mu = std::max(mu / Scalar(3), Scalar(1e-14));
          stepped = true;
          break;
        }
        mu *= Scalar(10);
      }
      if (!stepped) break;  // stalled (typically a non-root stationary point)
    }

    CensusEntry<Scalar> entry{c, f.norm(), false, "", Scalar(0), false};
    const Scalar scale = std::max(Scalar(1), c.squaredNorm() / inertia.min_pair_sum());
    entry.converged = entry.residual <= Scalar(opts.converge_tol) * scale;

    Scalar best = std::numeric_limits<Scalar>::infinity();
    std::string best_name;
    for (int k = 1; k <= 15; ++k) {
      const Scalar d = distance_to_cartan(c, k);
      if (d < best) {
        best = d;
        best_name = "t" + std::to_string(k);
      }
    }
    for (const auto& fam : sfams) {
      const Scalar d = distance_to_continuous(c, fam);
      if (d < best) {
        best = d;
        best_name = "s" + std::to_string(fam.l);
      }
    }
    entry.nearest_family = best_name;
    entry.distance = best;
    entry.matched = entry.converged && best <= Scalar(opts.match_tol) * std::max(Scalar(1), c.norm());

    if (entry.converged) ++report.converged;
    if (entry.matched) ++report.matched;
    if (entry.converged && !entry.matched) ++report.outliers;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace so5

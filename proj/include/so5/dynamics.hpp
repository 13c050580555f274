#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so5/basis.hpp"
#include "so5/format.hpp"
#include "so5/inertia.hpp"
#include "so5/invariants.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

/// Time-stepping scheme for the rigid-body flow dM/dt = [M, Omega(M)].
enum class IntegrationScheme {
  kRK4,                 // classical fourth-order Runge-Kutta
  kRK4OrbitProjection,  // RK4 plus a Newton projection of every step back
                        // onto the (C1, C2) level set of the initial state
};

inline const char* scheme_label(IntegrationScheme scheme) {
  switch (scheme) {
    case IntegrationScheme::kRK4: return "RK4";
    case IntegrationScheme::kRK4OrbitProjection: return "RK4+OrbitProjection";
  }
  throw std::logic_error("scheme_label: invalid scheme");
}

inline IntegrationScheme scheme_from_label(const std::string& label) {
  if (label == "RK4" || label == "rk4") return IntegrationScheme::kRK4;
  if (label == "RK4+OrbitProjection" || label == "rk4-project" || label == "rk4+projection")
    return IntegrationScheme::kRK4OrbitProjection;
  throw std::invalid_argument("scheme_from_label: unknown scheme '" + label + "'");
}

/// Sampled solution of the flow on a uniform time grid.  States are stored
/// densely -- at the intended scales (T <= 10, dt >= 1e-4) this is at most a
/// few hundred thousand small matrices -- and antisymmetry is exact because
/// the states only ever exist as strict upper triangles.
template <typename Scalar>
struct Trajectory {
  std::vector<Scalar> times;               // i * dt, strictly increasing
  std::vector<SkewMatrix<Scalar>> states;  // same length as times
  IntegrationScheme scheme = IntegrationScheme::kRK4;
  Scalar dt = Scalar(0);
  std::vector<std::string> warnings;       // coarse-step / projection notices
};

using Trajectoryd = Trajectory<double>;

namespace detail {

/// One classical RK4 step.  The stage combination is assembled on the upper
/// triangles, so the result is skew-symmetric by construction.
template <typename Scalar>
SkewMatrix<Scalar> rk4_step(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia,
                            Scalar dt) {
  const SkewMatrix<Scalar> k1 = rigid_body_rhs(m, inertia);
  const SkewMatrix<Scalar> k2 = rigid_body_rhs(m + (dt / Scalar(2)) * k1, inertia);
  const SkewMatrix<Scalar> k3 = rigid_body_rhs(m + (dt / Scalar(2)) * k2, inertia);
  const SkewMatrix<Scalar> k4 = rigid_body_rhs(m + dt * k3, inertia);
  SkewMatrix<Scalar> out = m;
  out.upper() += (dt / Scalar(6)) *
                 (k1.upper() + Scalar(2) * k2.upper() + Scalar(2) * k3.upper() + k4.upper());
  return out;
}

/// Newton projection onto the joint level set C1 = c1, C2 = c2, searching in
/// the span of the two Casimir gradients.  An RK4 step leaves a residual of
/// order dt^5, so one or two iterations normally land below tolerance.
/// Returns true when both residuals are below tol relative to 1 + |target|.
template <typename Scalar>
bool project_onto_level_set(SkewMatrix<Scalar>& m, Scalar c1, Scalar c2,
                            int max_iterations = 5, Scalar tol = Scalar(1e-13)) {
  const Scalar scale1 = Scalar(1) + std::abs(c1);
  const Scalar scale2 = Scalar(1) + std::abs(c2);
  for (int it = 0; it < max_iterations; ++it) {
    const Scalar r1 = casimir_c1(m) - c1;
    const Scalar r2 = casimir_c2(m) - c2;
    if (std::abs(r1) <= tol * scale1 && std::abs(r2) <= tol * scale2) return true;

    const auto g1 = grad_casimir_c1(m).upper();
    const auto g2 = grad_casimir_c2(m).upper();
    Eigen::Matrix<Scalar, 2, 2> gram;
    gram << g1.dot(g1), g1.dot(g2), g2.dot(g1), g2.dot(g2);
    const Eigen::Matrix<Scalar, 2, 1> residual(r1, r2);
    const Eigen::Matrix<Scalar, 2, 1> coeff = gram.fullPivLu().solve(residual);
    if (!coeff.allFinite()) return false;  // gradients degenerate; leave m as is
    m.upper() -= coeff[0] * g1 + coeff[1] * g2;
  }
  return std::abs(casimir_c1(m) - c1) <= tol * scale1 &&
         std::abs(casimir_c2(m) - c2) <= tol * scale2;
}

}  // namespace detail

/// Integrate the flow from m0 for `steps` uniform steps of size dt.  The
/// projection variant pins the two Casimirs of the initial state to roundoff
/// at every step; the plain variant is the reference for drift measurements.
/// A warning is recorded when dt * |Omega(m0)| exceeds 0.1 (the step no
/// longer resolves the fastest rotation).  Throws if a state goes non-finite.
template <typename Scalar>
Trajectory<Scalar> integrate(const SkewMatrix<Scalar>& m0, const InertiaSpec<Scalar>& inertia,
                             Scalar dt, int steps,
                             IntegrationScheme scheme = IntegrationScheme::kRK4) {
  detail::check_dims(m0, inertia, "integrate");
  if (!(dt > Scalar(0))) throw std::invalid_argument("integrate: dt must be positive");
  if (steps < 0) throw std::invalid_argument("integrate: step count must be >= 0");

  Trajectory<Scalar> traj;
  traj.scheme = scheme;
  traj.dt = dt;
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);

  const Scalar step_angle = dt * omega_from_momentum(m0, inertia).norm();
  if (step_angle > Scalar(0.1)) {
    std::ostringstream msg;
    msg << "step size too coarse: dt * |Omega(M0)| = " << step_angle
        << " exceeds 0.1; expect visible integration error";
    traj.warnings.push_back(msg.str());
  }

  const Scalar c1 = casimir_c1(m0);
  const Scalar c2 = casimir_c2(m0);

  SkewMatrix<Scalar> m = m0;
  traj.times.push_back(Scalar(0));
  traj.states.push_back(m);
  bool projection_noted = false;
  for (int step = 1; step <= steps; ++step) {
    m = detail::rk4_step(m, inertia, dt);
    if (scheme == IntegrationScheme::kRK4OrbitProjection &&
        !detail::project_onto_level_set(m, c1, c2) && !projection_noted) {
      std::ostringstream msg;
      msg << "orbit projection missed tolerance at step " << step;
      traj.warnings.push_back(msg.str());
      projection_noted = true;
    }
    if (!m.upper().allFinite()) {
      std::ostringstream msg;
      msg << "integrate: non-finite state after step " << step;
      throw std::runtime_error(msg.str());
    }
    traj.times.push_back(Scalar(step) * dt);
    traj.states.push_back(m);
  }
  return traj;
}

/// One row of a conservation report: a tracked invariant, its value at the
/// initial state, and its maximal drift along the trajectory relative to
/// 1 + |initial|.
template <typename Scalar>
struct InvariantDrift {
  std::string name;
  Scalar initial = Scalar(0);
  Scalar max_drift = Scalar(0);
};

/// Evaluate the full tower of tracked invariants along a trajectory: the
/// Hamiltonian, both Casimirs, the Manakov integrals (K3 only on so(5)), and
/// the generator integrals F1..Fn.  On so(5) this is the eleven-entry list
/// H, C1, C2, K1, K2, K3, F1..F5 in that order.
template <typename Scalar>
std::vector<InvariantDrift<Scalar>> conservation_report(const Trajectory<Scalar>& traj,
                                                        const InertiaSpec<Scalar>& inertia) {
  if (traj.states.empty())
    throw std::invalid_argument("conservation_report: trajectory is empty");
  detail::check_dims(traj.states.front(), inertia, "conservation_report");
  const int n = static_cast<int>(traj.states.front().dim());

  using Evaluator = std::function<Scalar(const SkewMatrix<Scalar>&)>;
  std::vector<std::pair<std::string, Evaluator>> tracked;
  tracked.emplace_back("H", [&](const SkewMatrix<Scalar>& m) { return hamiltonian(m, inertia); });
  tracked.emplace_back("C1", [](const SkewMatrix<Scalar>& m) { return casimir_c1(m); });
  tracked.emplace_back("C2", [](const SkewMatrix<Scalar>& m) { return casimir_c2(m); });
  tracked.emplace_back("K1", [&](const SkewMatrix<Scalar>& m) { return manakov_k1(m, inertia); });
  tracked.emplace_back("K2", [&](const SkewMatrix<Scalar>& m) { return manakov_k2(m, inertia); });
  if (n == 5)
    tracked.emplace_back("K3",
                         [&](const SkewMatrix<Scalar>& m) { return manakov_k3(m, inertia); });
  for (int i = 1; i <= n; ++i)
    tracked.emplace_back("F" + std::to_string(i), [&inertia, i](const SkewMatrix<Scalar>& m) {
      return generator_integral(m, inertia, i);
    });

  std::vector<InvariantDrift<Scalar>> report;
  report.reserve(tracked.size());
  for (const auto& [name, evaluate] : tracked) {
    InvariantDrift<Scalar> row;
    row.name = name;
    row.initial = evaluate(traj.states.front());
    const Scalar scale = Scalar(1) + std::abs(row.initial);
    for (const auto& state : traj.states)
      row.max_drift = std::max(row.max_drift, std::abs(evaluate(state) - row.initial) / scale);
    report.push_back(std::move(row));
  }
  return report;
}

/// Largest drift in a report; convenient for pass/fail summaries.
template <typename Scalar>
Scalar max_drift(const std::vector<InvariantDrift<Scalar>>& report) {
  Scalar worst = Scalar(0);
  for (const auto& row : report) worst = std::max(worst, row.max_drift);
  return worst;
}

/// Write an so(5) trajectory as CSV with header t,x1,x2,x3,y1,y2,y3,z1,z2,
/// z3,z4.  Every `stride`-th state is emitted (the initial state always is);
/// floats carry 17 significant digits so the file round-trips doubles.
template <typename Scalar>
void write_trajectory_csv(std::ostream& out, const Trajectory<Scalar>& traj, int stride = 1) {
  if (stride < 1) throw std::invalid_argument("write_trajectory_csv: stride must be >= 1");
  out << 't';
  for (const char* name : kCoordNames) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < traj.states.size(); i += static_cast<std::size_t>(stride)) {
    const Coordinates10<Scalar> c = matrix_to_coords(traj.states[i]);
    out << format_double17(static_cast<double>(traj.times[i]));
    for (int p = 0; p < kCoordCount; ++p)
      out << ',' << format_double17(static_cast<double>(c[p]));
    out << '\n';
  }
}

}  // namespace so5

#pragma once

#include <stdexcept>

#include "so5/inertia.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

namespace detail {
template <typename Scalar>
void check_dims(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia,
                const char* what) {
  if (m.dim() != inertia.dim())
    throw std::invalid_argument(std::string(what) + ": matrix/inertia dimension mismatch");
}
}  // namespace detail

/// Invert the momentum map M = Omega J + J Omega entrywise:
/// w_ij = m_ij / (lambda_i + lambda_j).
template <typename Scalar>
SkewMatrix<Scalar> omega_from_momentum(const SkewMatrix<Scalar>& m,
                                       const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "omega_from_momentum");
  const Eigen::Index n = m.dim();
  SkewMatrix<Scalar> omega(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      omega.set(i, j, m(i, j) / inertia.pair_sum(i, j));
  return omega;
}

template <typename Scalar>
SkewMatrix<Scalar> momentum_from_omega(const SkewMatrix<Scalar>& omega,
                                       const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(omega, inertia, "momentum_from_omega");
  const Eigen::Index n = omega.dim();
  SkewMatrix<Scalar> m(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m.set(i, j, omega(i, j) * inertia.pair_sum(i, j));
  return m;
}

/// Free rigid body equations on so(n): dM/dt = [M, Omega(M)].
template <typename Scalar>
SkewMatrix<Scalar> rigid_body_rhs(const SkewMatrix<Scalar>& m,
                                  const InertiaSpec<Scalar>& inertia) {
  return commutator(m, omega_from_momentum(m, inertia));
}

/// Kinetic energy H(M) = -1/4 tr(M Omega) = 1/2 sum_{i<j} m_ij^2 / (lambda_i + lambda_j).
template <typename Scalar>
Scalar hamiltonian(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "hamiltonian");
  const Eigen::Index n = m.dim();
  Scalar h(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar v = m(i, j);
      h += v * v / inertia.pair_sum(i, j);
    }
  return h / Scalar(2);
}

/// Gradient of H with respect to <X,Y> = -1/2 tr(XY); equals Omega(M).
template <typename Scalar>
SkewMatrix<Scalar> grad_hamiltonian(const SkewMatrix<Scalar>& m,
                                    const InertiaSpec<Scalar>& inertia) {
  return omega_from_momentum(m, inertia);
}

}  // namespace so5

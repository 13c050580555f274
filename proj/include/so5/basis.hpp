#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>

#include "so5/inertia.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

inline constexpr int kCoordCount = 10;

template <typename Scalar>
using Coordinates10 = Eigen::Matrix<Scalar, kCoordCount, 1>;
template <typename Scalar>
using Matrix10 = Eigen::Matrix<Scalar, kCoordCount, kCoordCount, Eigen::RowMajor>;

using Coordinates10d = Coordinates10<double>;
using Matrix10d = Matrix10<double>;

/// Coordinate names in storage order.
inline constexpr std::array<const char*, kCoordCount> kCoordNames = {
    "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3", "z4"};

/// For each coordinate, the (row, col) pair of the matrix entry it sits in
/// (0-based, row < col) together with the sign of that entry:
///   m(row, col) = sign * coordinate.
/// The x block carries two minus signs: m(0,1) = -x3 and m(1,2) = -x1.
struct CoordSlot {
  int row;
  int col;
  int sign;
};

inline constexpr std::array<CoordSlot, kCoordCount> kCoordSlots = {{
    {1, 2, -1},  // x1
    {0, 2, +1},  // x2
    {0, 1, -1},  // x3
    {0, 3, +1},  // y1
    {1, 3, +1},  // y2
    {2, 3, +1},  // y3
    {0, 4, +1},  // z1
    {1, 4, +1},  // z2
    {2, 4, +1},  // z3
    {3, 4, +1},  // z4
}};

template <typename Scalar>
SkewMatrix<Scalar> coords_to_matrix(const Coordinates10<Scalar>& c) {
  SkewMatrix<Scalar> m(5);
  for (int p = 0; p < kCoordCount; ++p) {
    const CoordSlot& s = kCoordSlots[p];
    m.set(s.row, s.col, Scalar(s.sign) * c[p]);
  }
  return m;
}

template <typename Scalar>
Coordinates10<Scalar> matrix_to_coords(const SkewMatrix<Scalar>& m) {
  if (m.dim() != 5)
    throw std::invalid_argument("matrix_to_coords: coordinates are defined for n = 5 only");
  Coordinates10<Scalar> c;
  for (int p = 0; p < kCoordCount; ++p) {
    const CoordSlot& s = kCoordSlots[p];
    c[p] = Scalar(s.sign) * m(s.row, s.col);
  }
  return c;
}

/// Basis element E_i (1-based, i = 1..10); orthonormal in <X,Y> = -1/2 tr(XY).
template <typename Scalar>
SkewMatrix<Scalar> basis_element(int i) {
  if (i < 1 || i > kCoordCount)
    throw std::invalid_argument("basis_element: index must be in 1..10");
  Coordinates10<Scalar> c = Coordinates10<Scalar>::Zero();
  c[i - 1] = Scalar(1);
  return coords_to_matrix(c);
}

/// Structure constants of the basis: [E_i, E_j] = sign(k) * E_|k| where
/// k = structure_constant(i, j) (1-based i, j; k = 0 means the bracket
/// vanishes).  All nonzero constants are +/-1, so a single signed index
/// encodes the whole bracket.
inline int structure_constant(int i, int j) {
  static constexpr int table[kCoordCount][kCoordCount] = {
      {0, 3, -2, 0, 6, -5, 0, 9, -8, 0},
      {-3, 0, 1, -6, 0, 4, -9, 0, 7, 0},
      {2, -1, 0, 5, -4, 0, 8, -7, 0, 0},
      {0, 6, -5, 0, 3, -2, -10, 0, 0, 7},
      {-6, 0, 4, -3, 0, 1, 0, -10, 0, 8},
      {5, -4, 0, 2, -1, 0, 0, 0, -10, 9},
      {0, 9, -8, 10, 0, 0, 0, 3, -2, -4},
      {-9, 0, 7, 0, 10, 0, -3, 0, 1, -5},
      {8, -7, 0, 0, 0, 10, 2, -1, 0, -6},
      {0, 0, 0, -7, -8, -9, 4, 5, 6, 0},
  };
  if (i < 1 || i > kCoordCount || j < 1 || j > kCoordCount)
    throw std::invalid_argument("structure_constant: indices must be in 1..10");
  return table[i - 1][j - 1];
}

/// Lie-Poisson tensor at coordinates c: the minus Lie-Poisson structure whose
/// Hamiltonian vector field is dC/dt = Gamma_-(c) * grad H(c).  Linear in c;
/// rank <= 8 everywhere (the two Casimir gradients span its kernel).
template <typename Scalar>
Matrix10<Scalar> poisson_tensor(const Coordinates10<Scalar>& c) {
  const Scalar x1 = c[0], x2 = c[1], x3 = c[2];
  const Scalar y1 = c[3], y2 = c[4], y3 = c[5];
  const Scalar z1 = c[6], z2 = c[7], z3 = c[8], z4 = c[9];
  const Scalar o = Scalar(0);
  Matrix10<Scalar> g;
  g << o, -x3, x2, o, -y3, y2, o, -z3, z2, o,
      x3, o, -x1, y3, o, -y1, z3, o, -z1, o,
      -x2, x1, o, -y2, y1, o, -z2, z1, o, o,
      o, -y3, y2, o, -x3, x2, z4, o, o, -z1,
      y3, o, -y1, x3, o, -x1, o, z4, o, -z2,
      -y2, y1, o, -x2, x1, o, o, o, z4, -z3,
      o, -z3, z2, -z4, o, o, o, -x3, x2, y1,
      z3, o, -z1, o, -z4, o, x3, o, -x1, y2,
      -z2, z1, o, o, o, -z4, -x2, x1, o, y3,
      o, o, o, z1, z2, z3, -y1, -y2, -y3, o;
  return g;
}

namespace detail {
template <typename Scalar>
void check_so5_pair(const InertiaSpec<Scalar>& inertia) {
  if (inertia.dim() != 5)
    throw std::invalid_argument("coordinate form requires a 5-dimensional inertia spec");
}
}  // namespace detail

/// Pair sum lambda_i + lambda_j attached to coordinate p (the momentum map
/// divides coordinate p by this factor).
template <typename Scalar>
Scalar coord_pair_sum(const InertiaSpec<Scalar>& inertia, int p) {
  detail::check_so5_pair(inertia);
  const CoordSlot& s = kCoordSlots[p];
  return inertia.pair_sum(s.row, s.col);
}

/// Equations of motion written out in coordinates; equal to
/// matrix_to_coords(rigid_body_rhs(coords_to_matrix(c), inertia)) but kept
/// as an independent evaluation path for cross-checking.
template <typename Scalar>
Coordinates10<Scalar> rhs_coordinate_path(const Coordinates10<Scalar>& c,
                                          const InertiaSpec<Scalar>& inertia) {
  detail::check_so5_pair(inertia);
  const Scalar x1 = c[0], x2 = c[1], x3 = c[2];
  const Scalar y1 = c[3], y2 = c[4], y3 = c[5];
  const Scalar z1 = c[6], z2 = c[7], z3 = c[8], z4 = c[9];
  const auto& l = inertia.lambdas();
  auto s = [&](int i, int j) { return l[i - 1] + l[j - 1]; };
  auto d = [&](int i, int j) { return l[i - 1] - l[j - 1]; };

  Coordinates10<Scalar> out;
  out[0] = d(2, 3) * (y2 * y3 / (s(2, 4) * s(3, 4)) - x2 * x3 / (s(1, 2) * s(1, 3)) +
                      z2 * z3 / (s(2, 5) * s(3, 5)));
  out[1] = d(3, 1) * (y1 * y3 / (s(1, 4) * s(3, 4)) - x1 * x3 / (s(1, 2) * s(2, 3)) +
                      z1 * z3 / (s(1, 5) * s(3, 5)));
  out[2] = d(1, 2) * (y1 * y2 / (s(1, 4) * s(2, 4)) - x1 * x2 / (s(2, 3) * s(1, 3)) +
                      z1 * z2 / (s(1, 5) * s(2, 5)));
  out[3] = d(1, 4) * (x2 * y3 / (s(1, 3) * s(3, 4)) - x3 * y2 / (s(1, 2) * s(2, 4)) -
                      z1 * z4 / (s(1, 5) * s(4, 5)));
  out[4] = d(2, 4) * (x3 * y1 / (s(1, 2) * s(1, 4)) - x1 * y3 / (s(2, 3) * s(3, 4)) -
                      z2 * z4 / (s(2, 5) * s(4, 5)));
  out[5] = d(3, 4) * (x1 * y2 / (s(2, 3) * s(2, 4)) - x2 * y1 / (s(1, 3) * s(1, 4)) -
                      z3 * z4 / (s(3, 5) * s(4, 5)));
  out[6] = d(1, 5) * (x2 * z3 / (s(1, 3) * s(3, 5)) - x3 * z2 / (s(1, 2) * s(2, 5)) +
                      y1 * z4 / (s(1, 4) * s(4, 5)));
  out[7] = d(2, 5) * (x3 * z1 / (s(1, 2) * s(1, 5)) - x1 * z3 / (s(2, 3) * s(3, 5)) +
                      y2 * z4 / (s(2, 4) * s(4, 5)));
  out[8] = d(3, 5) * (x1 * z2 / (s(2, 3) * s(2, 5)) - x2 * z1 / (s(1, 3) * s(1, 5)) +
                      y3 * z4 / (s(3, 4) * s(4, 5)));
  out[9] = d(4, 5) * (-y1 * z1 / (s(1, 4) * s(1, 5)) - y2 * z2 / (s(2, 4) * s(2, 5)) -
                      y3 * z3 / (s(3, 4) * s(3, 5)));
  return out;
}

/// Kinetic energy in coordinates: H = 1/2 sum_p c_p^2 / pair_sum(p).
template <typename Scalar>
Scalar hamiltonian_coordinate_path(const Coordinates10<Scalar>& c,
                                   const InertiaSpec<Scalar>& inertia) {
  detail::check_so5_pair(inertia);
  Scalar h(0);
  for (int p = 0; p < kCoordCount; ++p) h += c[p] * c[p] / coord_pair_sum(inertia, p);
  return h / Scalar(2);
}

/// grad H in coordinates: component p is c_p / pair_sum(p) (the angular
/// velocity in coordinates).
template <typename Scalar>
Coordinates10<Scalar> grad_hamiltonian_coords(const Coordinates10<Scalar>& c,
                                              const InertiaSpec<Scalar>& inertia) {
  detail::check_so5_pair(inertia);
  Coordinates10<Scalar> g;
  for (int p = 0; p < kCoordCount; ++p) g[p] = c[p] / coord_pair_sum(inertia, p);
  return g;
}

/// Derivative of the vector field in coordinates.  Column p is the
/// directional derivative along E_{p+1}:
///   d/de [M + e E, Omega(M + e E)]|_{e=0} = [E, Omega(M)] + [M, Omega(E)],
/// and Omega(E_p) = E_p / pair_sum(p) because each basis element occupies a
/// single matrix slot.
template <typename Scalar>
Matrix10<Scalar> rhs_jacobian(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_so5_pair(inertia);
  if (m.dim() != 5)
    throw std::invalid_argument("rhs_jacobian: coordinate linearization requires n = 5");
  const SkewMatrix<Scalar> omega = omega_from_momentum(m, inertia);
  Matrix10<Scalar> a;
  for (int p = 0; p < kCoordCount; ++p) {
    const SkewMatrix<Scalar> e = basis_element<Scalar>(p + 1);
    const SkewMatrix<Scalar> col =
        commutator(e, omega) + commutator(m, e) * (Scalar(1) / coord_pair_sum(inertia, p));
    a.col(p) = matrix_to_coords(col);
  }
  return a;
}

}  // namespace so5

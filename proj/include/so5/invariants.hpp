#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so5/basis.hpp"
#include "so5/inertia.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

/// A named conserved quantity together with its homogeneity degree in M
/// (every integral here is a homogeneous polynomial in the entries of M).
template <typename Scalar>
struct IntegralValue {
  std::string name;
  Scalar value;
  int degree;
};

namespace detail {

/// Strict upper triangle of a dense product that is skew in exact
/// arithmetic; building from the triangle keeps the result structurally skew.
template <typename Scalar>
SkewMatrix<Scalar> skew_from_upper(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& d) {
  const Eigen::Index n = d.rows();
  SkewMatrix<Scalar> out(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) out.set(i, j, d(i, j));
  return out;
}

template <typename Scalar>
SkewMatrix<Scalar> skew_cube(const SkewMatrix<Scalar>& m) {
  const auto d = m.dense();
  return skew_from_upper<Scalar>((d * d * d).eval());
}

}  // namespace detail

/// Quadratic Casimir C1 = -1/4 tr(M^2) = 1/2 sum_{i<j} m_ij^2.
template <typename Scalar>
Scalar casimir_c1(const SkewMatrix<Scalar>& m) {
  return m.upper().squaredNorm() / Scalar(2);
}

/// Quartic Casimir C2 = 1/8 tr(M^4) = 1/8 ||M^2||_F^2.
template <typename Scalar>
Scalar casimir_c2(const SkewMatrix<Scalar>& m) {
  const auto d = m.dense();
  return (d * d).squaredNorm() / Scalar(8);
}

/// Both Casimirs of so(5) (rank 2: exactly two of them).
template <typename Scalar>
std::pair<Scalar, Scalar> casimirs(const SkewMatrix<Scalar>& m) {
  if (m.dim() != 5)
    throw std::invalid_argument("casimirs: the (C1, C2) pair is defined for n = 5");
  return {casimir_c1(m), casimir_c2(m)};
}

/// Gradient of C1 in <X,Y> = -1/2 tr(XY): grad C1 = M.
template <typename Scalar>
SkewMatrix<Scalar> grad_casimir_c1(const SkewMatrix<Scalar>& m) {
  return m;
}

/// Gradient of C2: grad C2 = -M^3.
template <typename Scalar>
SkewMatrix<Scalar> grad_casimir_c2(const SkewMatrix<Scalar>& m) {
  return -detail::skew_cube(m);
}

/// C1 written out in coordinates (independent evaluation path).
template <typename Scalar>
Scalar casimir_c1_coordinate_path(const Coordinates10<Scalar>& c) {
  return c.squaredNorm() / Scalar(2);
}

/// C2 written out in coordinates: the full degree-4 polynomial expansion,
/// kept term-for-term as an independent evaluation path.
template <typename Scalar>
Scalar casimir_c2_coordinate_path(const Coordinates10<Scalar>& c) {
  const Scalar x1 = c[0], x2 = c[1], x3 = c[2];
  const Scalar y1 = c[3], y2 = c[4], y3 = c[5];
  const Scalar z1 = c[6], z2 = c[7], z3 = c[8], z4 = c[9];
  auto sq = [](Scalar v) { return v * v; };
  return (sq(x2 * x2 + x3 * x3 + y1 * y1 + z1 * z1) +
          sq(x1 * x1 + x3 * x3 + y2 * y2 + z2 * z2) +
          sq(x1 * x1 + x2 * x2 + y3 * y3 + z3 * z3) +
          sq(y1 * y1 + y2 * y2 + y3 * y3 + z4 * z4) +
          sq(z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4) +
          Scalar(2) * sq(y1 * z1 + y2 * z2 + y3 * z3) +
          Scalar(2) * sq(x2 * y3 - x3 * y2 - z1 * z4) +
          Scalar(2) * sq(x3 * y1 - x1 * y3 - z2 * z4) +
          Scalar(2) * sq(x1 * y2 - x2 * y1 - z3 * z4) +
          Scalar(2) * sq(x3 * z2 - x2 * z3 - y1 * z4) +
          Scalar(2) * sq(x1 * z3 - x3 * z1 - y2 * z4) +
          Scalar(2) * sq(x2 * z1 - x1 * z2 - y3 * z4) +
          Scalar(2) * sq(x1 * x2 - y1 * y2 - z1 * z2) +
          Scalar(2) * sq(x1 * x3 - y1 * y3 - z1 * z3) +
          Scalar(2) * sq(x2 * x3 - y2 * y3 - z2 * z3)) /
         Scalar(8);
}

/// Mishchenko integral of order r:
/// m_r = sum_{i<k} (lambda_i^r - lambda_k^r) / (lambda_i^2 - lambda_k^2) m_ik^2.
/// Collapses: m_1 = 2H, m_2 = 2 C1, m_4 = 2 K1, m_6 = 2 K2.
template <typename Scalar>
Scalar mishchenko_integral(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia,
                           int r) {
  detail::check_dims(m, inertia, "mishchenko_integral");
  if (r < 1) throw std::invalid_argument("mishchenko_integral: order must be >= 1");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  auto int_pow = [](Scalar base, int e) {
    Scalar acc(1);
    for (int q = 0; q < e; ++q) acc *= base;
    return acc;
  };
  Scalar acc(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const Scalar num = int_pow(l[i], r) - int_pow(l[k], r);
      const Scalar den = l[i] * l[i] - l[k] * l[k];
      const Scalar v = m(i, k);
      acc += num / den * v * v;
    }
  return acc;
}

/// Generator integral F_i = sum_{k != i} m_ik^2 / (lambda_i^2 - lambda_k^2)
/// (1-based i).  These generate the Mishchenko tower:
/// m_r = sum_i lambda_i^r F_i for every r >= 1.
template <typename Scalar>
Scalar generator_integral(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia,
                          int i) {
  detail::check_dims(m, inertia, "generator_integral");
  if (i < 1 || i > m.dim())
    throw std::invalid_argument("generator_integral: index must be in 1..n");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  const Eigen::Index p = i - 1;
  Scalar acc(0);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p) continue;
    const Scalar v = m(p, k);
    acc += v * v / (l[p] * l[p] - l[k] * l[k]);
  }
  return acc;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> generator_integrals(const SkewMatrix<Scalar>& m,
                                                             const InertiaSpec<Scalar>& inertia) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> f(m.dim());
  for (Eigen::Index i = 0; i < m.dim(); ++i)
    f[i] = generator_integral(m, inertia, static_cast<int>(i) + 1);
  return f;
}

/// K1 = 1/2 sum_{i<k} (lambda_i^2 + lambda_k^2) m_ik^2 (quadratic form; the
/// trace-sum form below is the independent cross-check path).
template <typename Scalar>
Scalar manakov_k1(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k1");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  Scalar acc(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const Scalar v = m(i, k);
      acc += (l[i] * l[i] + l[k] * l[k]) * v * v;
    }
  return acc / Scalar(2);
}

/// K2 = 1/2 sum_{i<k} (lambda_i^4 + lambda_i^2 lambda_k^2 + lambda_k^4) m_ik^2.
template <typename Scalar>
Scalar manakov_k2(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k2");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  Scalar acc(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const Scalar li2 = l[i] * l[i], lk2 = l[k] * l[k];
      const Scalar v = m(i, k);
      acc += (li2 * li2 + li2 * lk2 + lk2 * lk2) * v * v;
    }
  return acc / Scalar(2);
}

/// Trace-sum path: K1 = -1/4 tr( sum_{p=0..3} J^p M J^(3-p) Omega ).
template <typename Scalar>
Scalar manakov_k1_trace_path(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k1_trace_path");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense md = m.dense();
  const Dense omega = omega_from_momentum(m, inertia).dense();
  const Dense j = inertia.lambdas().asDiagonal();
  Dense acc = Dense::Zero(m.dim(), m.dim());
  Dense jp = Dense::Identity(m.dim(), m.dim());
  std::vector<Dense> powers;
  for (int p = 0; p <= 3; ++p) {
    powers.push_back(jp);
    jp = jp * j;
  }
  for (int p = 0; p <= 3; ++p) acc += powers[p] * md * powers[3 - p];
  return -(acc * omega).trace() / Scalar(4);
}

/// Trace-sum path with exponent 5: K2 = -1/4 tr( sum_{p=0..5} J^p M J^(5-p) Omega ).
template <typename Scalar>
Scalar manakov_k2_trace_path(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k2_trace_path");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense md = m.dense();
  const Dense omega = omega_from_momentum(m, inertia).dense();
  const Dense j = inertia.lambdas().asDiagonal();
  Dense acc = Dense::Zero(m.dim(), m.dim());
  Dense jp = Dense::Identity(m.dim(), m.dim());
  std::vector<Dense> powers;
  for (int p = 0; p <= 5; ++p) {
    powers.push_back(jp);
    jp = jp * j;
  }
  for (int p = 0; p <= 5; ++p) acc += powers[p] * md * powers[5 - p];
  return -(acc * omega).trace() / Scalar(4);
}

/// K3 = 1/10 sum_j T_j lambda_j^2 with the five quartic row polynomials T_j
/// written out term-for-term.  Defined on so(5) only.
template <typename Scalar>
Scalar manakov_k3(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k3");
  if (m.dim() != 5) throw std::invalid_argument("manakov_k3: defined for n = 5");
  const Coordinates10<Scalar> c = matrix_to_coords(m);
  const Scalar x1 = c[0], x2 = c[1], x3 = c[2];
  const Scalar y1 = c[3], y2 = c[4], y3 = c[5];
  const Scalar z1 = c[6], z2 = c[7], z3 = c[8], z4 = c[9];
  auto sq = [](Scalar v) { return v * v; };

  const Scalar t1 = sq(x3 * z2 - x2 * z3 - y1 * z4) + sq(x2 * y3 - x3 * y2 - z1 * z4) +
                    sq(x1 * x3 - y1 * y3 - z1 * z3) + sq(x1 * x2 - y1 * y2 - z1 * z2) +
                    sq(x2 * x2 + x3 * x3 + y1 * y1 + z1 * z1);
  const Scalar t2 = sq(x1 * z3 - x3 * z1 - y2 * z4) + sq(x3 * y1 - x1 * y3 - z2 * z4) +
                    sq(x2 * x3 - y2 * y3 - z2 * z3) + sq(x1 * x2 - y1 * y2 - z1 * z2) +
                    sq(x1 * x1 + x3 * x3 + y2 * y2 + z2 * z2);
  const Scalar t3 = sq(x2 * z1 - x1 * z2 - y3 * z4) + sq(x1 * y2 - x2 * y1 - z3 * z4) +
                    sq(x1 * x3 - y1 * y3 - z1 * z3) + sq(x2 * x3 - y2 * y3 - z2 * z3) +
                    sq(x1 * x1 + x2 * x2 + y3 * y3 + z3 * z3);
  const Scalar t4 = sq(y1 * z1 + y2 * z2 + y3 * z3) + sq(x3 * y1 - x1 * y3 - z2 * z4) +
                    sq(x2 * y3 - x3 * y2 - z1 * z4) + sq(x1 * y2 - x2 * y1 - z3 * z4) +
                    sq(y1 * y1 + y2 * y2 + y3 * y3 + z4 * z4);
  const Scalar t5 = sq(x3 * z2 - x2 * z3 - y1 * z4) + sq(x1 * z3 - x3 * z1 - y2 * z4) +
                    sq(x2 * z1 - x1 * z2 - y3 * z4) + sq(y1 * z1 + y2 * z2 + y3 * z3) +
                    sq(z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4);

  const auto& l = inertia.lambdas();
  return (t1 * l[0] * l[0] + t2 * l[1] * l[1] + t3 * l[2] * l[2] + t4 * l[3] * l[3] +
          t5 * l[4] * l[4]) /
         Scalar(10);
}

/// Independent path for K3: the T_j are the squared row norms of M^2, so
/// K3 = 1/10 tr(J^2 M^4).
template <typename Scalar>
Scalar manakov_k3_trace_path(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "manakov_k3_trace_path");
  if (m.dim() != 5) throw std::invalid_argument("manakov_k3_trace_path: defined for n = 5");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense md = m.dense();
  const Dense m2 = md * md;
  const Dense j2 = inertia.lambdas().array().square().matrix().asDiagonal();
  return (j2 * m2 * m2).trace() / Scalar(10);
}

/// Gradient of K1: entrywise (lambda_i^2 + lambda_k^2) m_ik.
template <typename Scalar>
SkewMatrix<Scalar> grad_k1(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "grad_k1");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  SkewMatrix<Scalar> g(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k)
      g.set(i, k, (l[i] * l[i] + l[k] * l[k]) * m(i, k));
  return g;
}

/// Gradient of K2: entrywise (lambda_i^4 + lambda_i^2 lambda_k^2 + lambda_k^4) m_ik.
template <typename Scalar>
SkewMatrix<Scalar> grad_k2(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "grad_k2");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  SkewMatrix<Scalar> g(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const Scalar li2 = l[i] * l[i], lk2 = l[k] * l[k];
      g.set(i, k, (li2 * li2 + li2 * lk2 + lk2 * lk2) * m(i, k));
    }
  return g;
}

/// Gradient of K3 = 1/10 tr(J^2 M^4):
/// grad K3 = -1/5 (M^3 J^2 + M^2 J^2 M + M J^2 M^2 + J^2 M^3).
template <typename Scalar>
SkewMatrix<Scalar> grad_k3(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  detail::check_dims(m, inertia, "grad_k3");
  if (m.dim() != 5) throw std::invalid_argument("grad_k3: defined for n = 5");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense md = m.dense();
  const Dense m2 = md * md;
  const Dense m3 = m2 * md;
  const Dense j2 = inertia.lambdas().array().square().matrix().asDiagonal();
  const Dense s = m3 * j2 + m2 * j2 * md + md * j2 * m2 + j2 * m3;
  return detail::skew_from_upper<Scalar>((Dense(-s / Scalar(5))).eval());
}

/// Gradient of F_i: entrywise 2 m_ik / (lambda_i^2 - lambda_k^2) on pairs
/// containing i, zero elsewhere.
template <typename Scalar>
SkewMatrix<Scalar> grad_generator_integral(const SkewMatrix<Scalar>& m,
                                           const InertiaSpec<Scalar>& inertia, int i) {
  detail::check_dims(m, inertia, "grad_generator_integral");
  if (i < 1 || i > m.dim())
    throw std::invalid_argument("grad_generator_integral: index must be in 1..n");
  const Eigen::Index n = m.dim();
  const auto& l = inertia.lambdas();
  const Eigen::Index p = i - 1;
  SkewMatrix<Scalar> g(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p) continue;
    // set() mirrors automatically, so the orientation of (p, k) is immaterial.
    g.set(p, k, Scalar(2) * m(p, k) / (l[p] * l[p] - l[k] * l[k]));
  }
  return g;
}

/// Coefficients of gamma^0..gamma^r in (1/2r) tr (M + gamma J^2)^r.
/// The M-dependent coefficients recover the integral tower:
///   r=2: gamma^0 = -C1;  r=3: gamma^1 = -K1;
///   r=4: gamma^0 = C2, gamma^2 = -K2;  r=5: gamma^1 = 5 K3.
template <typename Scalar>
std::vector<IntegralValue<Scalar>> manakov_expansion(const SkewMatrix<Scalar>& m,
                                                     const InertiaSpec<Scalar>& inertia, int r) {
  detail::check_dims(m, inertia, "manakov_expansion");
  if (m.dim() != 5) throw std::invalid_argument("manakov_expansion: defined for n = 5");
  if (r < 2 || r > 5) throw std::invalid_argument("manakov_expansion: order must be in 2..5");
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense a = m.dense();
  const Dense b = inertia.lambdas().array().square().matrix().asDiagonal();

  // Polynomial-in-gamma matrix power: coeffs[j] is the gamma^j matrix coefficient.
  std::vector<Dense> coeffs{Dense::Identity(5, 5)};
  for (int step = 0; step < r; ++step) {
    std::vector<Dense> next(coeffs.size() + 1, Dense::Zero(5, 5));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j] += coeffs[j] * a;
      next[j + 1] += coeffs[j] * b;
    }
    coeffs = std::move(next);
  }

  std::vector<IntegralValue<Scalar>> out;
  for (int j = 0; j <= r; ++j)
    out.push_back({"gamma^" + std::to_string(j), coeffs[j].trace() / Scalar(2 * r), r - j});
  return out;
}

/// The full conserved-quantity snapshot tracked along so(5) trajectories.
template <typename Scalar>
struct InvariantSnapshot {
  Scalar h;
  Scalar c1, c2;
  Scalar k1, k2, k3;
  Eigen::Matrix<Scalar, 5, 1> f;
  Eigen::Matrix<Scalar, 5, 1> mishchenko;  // orders r = 1..5
};

template <typename Scalar>
InvariantSnapshot<Scalar> snapshot(const SkewMatrix<Scalar>& m, const InertiaSpec<Scalar>& inertia) {
  if (m.dim() != 5) throw std::invalid_argument("snapshot: defined for n = 5");
  InvariantSnapshot<Scalar> s;
  s.h = hamiltonian(m, inertia);
  s.c1 = casimir_c1(m);
  s.c2 = casimir_c2(m);
  s.k1 = manakov_k1(m, inertia);
  s.k2 = manakov_k2(m, inertia);
  s.k3 = manakov_k3(m, inertia);
  for (int i = 0; i < 5; ++i) s.f[i] = generator_integral(m, inertia, i + 1);
  for (int r = 1; r <= 5; ++r) s.mishchenko[r - 1] = mishchenko_integral(m, inertia, r);
  return s;
}

/// Named list form of the snapshot with homogeneity degrees; order is the
/// order used by reports and by the drift monitor.
template <typename Scalar>
std::vector<IntegralValue<Scalar>> integral_list(const SkewMatrix<Scalar>& m,
                                                 const InertiaSpec<Scalar>& inertia) {
  const auto s = snapshot(m, inertia);
  std::vector<IntegralValue<Scalar>> out = {
      {"H", s.h, 2},   {"C1", s.c1, 2}, {"C2", s.c2, 4},
      {"K1", s.k1, 2}, {"K2", s.k2, 2}, {"K3", s.k3, 4},
  };
  for (int i = 0; i < 5; ++i) out.push_back({"F" + std::to_string(i + 1), s.f[i], 2});
  return out;
}

}  // namespace so5

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace so5 {

/// Skew-symmetric n x n matrix stored as its strict upper triangle
/// (row-major), so antisymmetry holds by construction rather than by
/// numerical accident.  Entries below the diagonal are derived as
/// m(j,i) = -m(i,j); the diagonal is identically zero.
///
/// The natural inner product on the algebra is <X,Y> = -1/2 tr(XY),
/// which in this storage is simply the dot product of the two upper
/// triangles.  norm() returns the induced norm sqrt(<M,M>).
template <typename Scalar>
class SkewMatrix {
 public:
  using UpperVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit SkewMatrix(Eigen::Index n)
      : n_(n), upper_(UpperVector::Zero(upper_size(n))) {
    if (n < 2) throw std::invalid_argument("SkewMatrix: dimension must be >= 2");
  }

  SkewMatrix(Eigen::Index n, UpperVector upper) : n_(n), upper_(std::move(upper)) {
    if (n < 2) throw std::invalid_argument("SkewMatrix: dimension must be >= 2");
    if (upper_.size() != upper_size(n)) {
      std::ostringstream msg;
      msg << "SkewMatrix: upper triangle for n=" << n << " needs "
          << upper_size(n) << " entries, got " << upper_.size();
      throw std::invalid_argument(msg.str());
    }
  }

  static SkewMatrix Zero(Eigen::Index n) { return SkewMatrix(n); }

  /// Build from a dense matrix that is already exactly antisymmetric
  /// (bitwise m(i,j) == -m(j,i), zero diagonal).  Intended for ingesting
  /// externally produced matrices; library code works on the triangle.
  static SkewMatrix FromDense(const DenseMatrix& m) {
    if (m.rows() != m.cols())
      throw std::invalid_argument("SkewMatrix::FromDense: matrix must be square");
    const Eigen::Index n = m.rows();
    SkewMatrix out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (m(i, i) != Scalar(0))
        throw std::invalid_argument("SkewMatrix::FromDense: nonzero diagonal");
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (m(i, j) != -m(j, i))
          throw std::invalid_argument("SkewMatrix::FromDense: matrix is not antisymmetric");
        out.upper_[upper_index(n, i, j)] = m(i, j);
      }
    }
    return out;
  }

  Eigen::Index dim() const { return n_; }
  static Eigen::Index upper_size(Eigen::Index n) { return n * (n - 1) / 2; }
  Eigen::Index upper_size() const { return upper_.size(); }

  /// Row-major position of (i,j), i < j, within the strict upper triangle.
  static Eigen::Index upper_index(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  /// Full entry access with the sign convention applied (0-based indices).
  Scalar operator()(Eigen::Index i, Eigen::Index j) const {
    if (i == j) return Scalar(0);
    if (i < j) return upper_[upper_index(n_, i, j)];
    return -upper_[upper_index(n_, j, i)];
  }

  /// Set entry (i,j), i != j; the mirrored entry follows automatically.
  void set(Eigen::Index i, Eigen::Index j, Scalar value) {
    if (i == j) throw std::invalid_argument("SkewMatrix::set: diagonal is fixed at zero");
    if (i < j)
      upper_[upper_index(n_, i, j)] = value;
    else
      upper_[upper_index(n_, j, i)] = -value;
  }

  const UpperVector& upper() const { return upper_; }
  UpperVector& upper() { return upper_; }

  DenseMatrix dense() const {
    DenseMatrix m = DenseMatrix::Zero(n_, n_);
    for (Eigen::Index i = 0; i < n_; ++i)
      for (Eigen::Index j = i + 1; j < n_; ++j) {
        const Scalar v = upper_[upper_index(n_, i, j)];
        m(i, j) = v;
        m(j, i) = -v;
      }
    return m;
  }

  /// Norm induced by <X,Y> = -1/2 tr(XY); the Frobenius norm is sqrt(2) times this.
  Scalar norm() const { return upper_.norm(); }

  SkewMatrix& operator+=(const SkewMatrix& rhs) {
    check_same_dim(rhs);
    upper_ += rhs.upper_;
    return *this;
  }
  SkewMatrix& operator-=(const SkewMatrix& rhs) {
    check_same_dim(rhs);
    upper_ -= rhs.upper_;
    return *this;
  }
  SkewMatrix& operator*=(Scalar s) {
    upper_ *= s;
    return *this;
  }

  friend SkewMatrix operator+(SkewMatrix lhs, const SkewMatrix& rhs) { return lhs += rhs; }
  friend SkewMatrix operator-(SkewMatrix lhs, const SkewMatrix& rhs) { return lhs -= rhs; }
  friend SkewMatrix operator*(Scalar s, SkewMatrix m) { return m *= s; }
  friend SkewMatrix operator*(SkewMatrix m, Scalar s) { return m *= s; }
  friend SkewMatrix operator-(SkewMatrix m) {
    m.upper_ = -m.upper_;
    return m;
  }

 private:
  void check_same_dim(const SkewMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("SkewMatrix: dimension mismatch");
  }

  Eigen::Index n_;
  UpperVector upper_;
};

using SkewMatrixd = SkewMatrix<double>;

/// Ad-invariant inner product <X,Y> = -1/2 tr(XY); reduces to the dot
/// product of the strict upper triangles.
template <typename Scalar>
Scalar inner_product(const SkewMatrix<Scalar>& x, const SkewMatrix<Scalar>& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  return x.upper().dot(y.upper());
}

/// Commutator [X,Y] = XY - YX, assembled entrywise on the upper triangle so
/// the result is skew by construction.
template <typename Scalar>
SkewMatrix<Scalar> commutator(const SkewMatrix<Scalar>& x, const SkewMatrix<Scalar>& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  const Eigen::Index n = x.dim();
  SkewMatrix<Scalar> out(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < n; ++k)
        acc += x(i, k) * y(k, j) - y(i, k) * x(k, j);
      out.set(i, j, acc);
    }
  return out;
}

}  // namespace so5

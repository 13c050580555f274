#pragma once

#include <Eigen/Dense>

#include <sstream>
#include <stdexcept>

namespace so5 {

/// Diagonal inertia operator J = diag(lambda_1, ..., lambda_n) defining the
/// momentum map M = Omega J + J Omega, i.e. m_ij = (lambda_i + lambda_j) w_ij.
///
/// Validity requires every pair sum lambda_i + lambda_j (i != j) to be
/// positive (so the momentum map is invertible and the Hamiltonian positive
/// definite) and the lambda_i to be pairwise distinct (the generator
/// integrals divide by lambda_i^2 - lambda_k^2).  The equilibrium and
/// stability analyses additionally assume the strictly decreasing ordering
/// lambda_1 > lambda_2 > ... > lambda_n; call require_strictly_decreasing()
/// before relying on sign conclusions drawn from that ordering.
template <typename Scalar>
class InertiaSpec {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit InertiaSpec(Vector lambdas) : lambdas_(std::move(lambdas)) {
    const Eigen::Index n = lambdas_.size();
    if (n < 2) throw std::invalid_argument("InertiaSpec: need at least two lambda values");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (lambdas_[i] == lambdas_[j]) {
          std::ostringstream msg;
          msg << "InertiaSpec: repeated lambda value at positions " << i + 1 << " and "
              << j + 1 << " (lambda=" << lambdas_[i] << "); pairwise distinctness violated";
          throw std::invalid_argument(msg.str());
        }
        if (!(lambdas_[i] + lambdas_[j] > Scalar(0))) {
          std::ostringstream msg;
          msg << "InertiaSpec: pair sum lambda_" << i + 1 << " + lambda_" << j + 1 << " = "
              << lambdas_[i] + lambdas_[j] << " violates lambda_i + lambda_j > 0";
          throw std::invalid_argument(msg.str());
        }
      }
  }

  Eigen::Index dim() const { return lambdas_.size(); }
  const Vector& lambdas() const { return lambdas_; }
  Scalar lambda(Eigen::Index i) const { return lambdas_[i]; }

  Scalar pair_sum(Eigen::Index i, Eigen::Index j) const { return lambdas_[i] + lambdas_[j]; }

  Scalar min_pair_sum() const {
    Scalar m = lambdas_[0] + lambdas_[1];
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = i + 1; j < dim(); ++j)
        if (lambdas_[i] + lambdas_[j] < m) m = lambdas_[i] + lambdas_[j];
    return m;
  }

  bool strictly_decreasing() const {
    for (Eigen::Index i = 0; i + 1 < dim(); ++i)
      if (!(lambdas_[i] > lambdas_[i + 1])) return false;
    return true;
  }

  void require_strictly_decreasing() const {
    if (!strictly_decreasing())
      throw std::invalid_argument(
          "InertiaSpec: analysis requires strictly decreasing ordering "
          "lambda_1 > lambda_2 > ... > lambda_n");
  }

 private:
  Vector lambdas_;
};

using InertiaSpecd = InertiaSpec<double>;

}  // namespace so5

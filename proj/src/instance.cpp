#include "sphconv/instance.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace sphconv {

QuadraticInstance::QuadraticInstance(MatrixX A, VectorX b, double c)
    : c_(c) {
  if (A.rows() != A.cols()) {
    throw InputError("A must be square, got " + std::to_string(A.rows()) +
                     "x" + std::to_string(A.cols()));
  }
  if (A.rows() < 3) {
    throw InputError("dimension n must be at least 3, got " +
                     std::to_string(A.rows()));
  }
  if (b.size() != A.rows()) {
    throw InputError("b has length " + std::to_string(b.size()) +
                     ", expected " + std::to_string(A.rows()));
  }
  if (!A.allFinite() || !b.allFinite() || !std::isfinite(c)) {
    throw InputError("instance contains non-finite entries");
  }
  max_asymmetry_ = (A - A.transpose()).cwiseAbs().maxCoeff();
  A_ = 0.5 * (A + A.transpose());
  b_ = std::move(b);

  Eigen::SelfAdjointEigenSolver<MatrixX> es(A_, Eigen::EigenvaluesOnly);
  lambda_min_ = es.eigenvalues()(0);
  lambda_max_ = es.eigenvalues()(A_.rows() - 1);
}

double QuadraticInstance::value(const VectorX& x) const {
  return x.dot(A_ * x) + b_.dot(x) + c_;
}

double QuadraticInstance::scale() const {
  return 1.0 + A_.norm() + b_.norm();
}

QuadraticInstance shift(const QuadraticInstance& inst, double lambda) {
  MatrixX A = inst.A();
  A.diagonal().array() -= lambda;
  return QuadraticInstance(std::move(A), inst.b(), inst.c());
}

bool is_zero_matrix(const MatrixX& A, double tol) {
  return A.cwiseAbs().maxCoeff() <= tol;
}

bool is_diagonal(const MatrixX& A, double tol) {
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i)
      if (i != j && std::abs(A(i, j)) > tol) return false;
  return true;
}

bool is_z_matrix(const MatrixX& A, double tol) {
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i)
      if (i != j && A(i, j) > tol) return false;
  return true;
}

}  // namespace sphconv

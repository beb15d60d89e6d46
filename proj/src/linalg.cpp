#include "sphconv/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace sphconv {

namespace {

void require_symmetric(const MatrixX& M, const char* who) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw ContractViolation(std::string(who) + ": matrix must be square and nonempty");
  }
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * (1.0 + M.norm())) {
    throw ContractViolation(std::string(who) + ": matrix is not symmetric");
  }
}

}  // namespace

EigenPair smallest_eigenpair(const MatrixX& M) {
  require_symmetric(M, "smallest_eigenpair");
  Eigen::SelfAdjointEigenSolver<MatrixX> es(M);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

EigenPair largest_eigenpair(const MatrixX& M) {
  require_symmetric(M, "largest_eigenpair");
  Eigen::SelfAdjointEigenSolver<MatrixX> es(M);
  const Index k = M.rows() - 1;
  return {es.eigenvalues()(k), es.eigenvectors().col(k)};
}

MatrixX complement_basis(const VectorX& x, Index pivot) {
  const Index n = x.size();
  if (pivot < 0 || pivot >= n) throw ContractViolation("complement_basis: bad pivot");
  // H = I - 2 w w^T / (w^T w) with H x = sigma e^pivot.
  const double sigma = x(pivot) >= 0.0 ? -x.norm() : x.norm();
  VectorX w = x;
  w(pivot) -= sigma;
  const double ww = w.squaredNorm();
  MatrixX H = MatrixX::Identity(n, n);
  if (ww > 0.0) H.noalias() -= (2.0 / ww) * w * w.transpose();

  MatrixX B(n, n - 1);
  for (Index j = 0, k = 0; j < n; ++j) {
    if (j == pivot) continue;
    B.col(k++) = H.col(j);
  }
  return B;
}

RestrictedOperator restrict_to_complement(const MatrixX& A, const VectorX& x,
                                          Index pivot) {
  RestrictedOperator op;
  op.base = x;
  op.basis = complement_basis(x, pivot);
  op.restricted = op.basis.transpose() * A * op.basis;
  // Symmetrize away rounding so the eigensolver sees an exact symmetric input.
  op.restricted = 0.5 * (op.restricted + op.restricted.transpose()).eval();
  return op;
}

EigenPair restricted_min_pair(const MatrixX& A, const VectorX& x, Index pivot) {
  const RestrictedOperator op = restrict_to_complement(A, x, pivot);
  const EigenPair p = smallest_eigenpair(op.restricted);
  return {p.value, op.basis * p.vector};
}

double restricted_lambda_min(const MatrixX& A, const VectorX& x) {
  return restricted_min_pair(A, x).value;
}

MatrixX projector_complement(const VectorX& x) {
  return MatrixX::Identity(x.size(), x.size()) - x * x.transpose();
}

MatrixX projector_onto(const VectorX& x) { return x * x.transpose(); }

double projection_formula_lambda_min(const MatrixX& A, const VectorX& x,
                                     const VectorX& r) {
  require_symmetric(A, "projection_formula_lambda_min");
  if (smallest_eigenpair(A).value <= 0.0) {
    throw NotPositiveDefinite(
        "projection_formula_lambda_min: A is not positive definite; shift by "
        "a multiple of the identity first");
  }
  if (std::abs(r.dot(x)) > 1e-8 || std::abs(r.norm() - 1.0) > 1e-8) {
    throw ContractViolation(
        "projection_formula_lambda_min: r must be a unit vector orthogonal to x");
  }
  const MatrixX P = projector_complement(x);
  const double lambda = r.dot(A * r);
  MatrixX M = P * A * P + lambda * projector_onto(x);
  M = 0.5 * (M + M.transpose()).eval();
  return smallest_eigenpair(M).value;
}

bool perron_check(const MatrixX& A) { return (A.array() > 0.0).all(); }

MatrixX deleted_submatrix(const MatrixX& A, Index k) {
  const Index n = A.rows();
  MatrixX S(n - 1, n - 1);
  for (Index i = 0, si = 0; i < n; ++i) {
    if (i == k) continue;
    for (Index j = 0, sj = 0; j < n; ++j) {
      if (j == k) continue;
      S(si, sj++) = A(i, j);
    }
    ++si;
  }
  return S;
}

}  // namespace sphconv

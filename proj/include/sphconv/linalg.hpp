#pragma once

#include "sphconv/types.hpp"

namespace sphconv {

struct EigenPair {
  double value = 0.0;
  VectorX vector;
};

/// Smallest eigenpair of a symmetric matrix. Throws ContractViolation for
/// non-symmetric input.
EigenPair smallest_eigenpair(const MatrixX& M);

/// Largest eigenpair of a symmetric matrix.
EigenPair largest_eigenpair(const MatrixX& M);

/// Orthonormal n x (n-1) basis of the complement of the unit vector x,
/// taken from the Householder reflection that maps x onto the `pivot` axis.
MatrixX complement_basis(const VectorX& x, Index pivot = 0);

/// A restricted to the hyperplane orthogonal to a base point.
struct RestrictedOperator {
  VectorX base;
  MatrixX basis;       // n x (n-1), orthonormal columns, basis^T base = 0
  MatrixX restricted;  // basis^T A basis
};

RestrictedOperator restrict_to_complement(const MatrixX& A, const VectorX& x,
                                          Index pivot = 0);

/// min <Au,u> over unit u orthogonal to x, via the complement basis.
double restricted_lambda_min(const MatrixX& A, const VectorX& x);

/// Minimizing unit vector u (in R^n, orthogonal to x) with its value.
EigenPair restricted_min_pair(const MatrixX& A, const VectorX& x,
                              Index pivot = 0);

/// P_x = I - x x^T.
MatrixX projector_complement(const VectorX& x);
/// Q_x = x x^T.
MatrixX projector_onto(const VectorX& x);

/// lambda_min(P_x A P_x + <Ar,r> Q_x) for positive definite A and unit r
/// orthogonal to x. Throws NotPositiveDefinite when A is not positive
/// definite; shift A first.
double projection_formula_lambda_min(const MatrixX& A, const VectorX& x,
                                     const VectorX& r);

/// All entries strictly positive.
bool perron_check(const MatrixX& A);

/// A with row and column k removed.
MatrixX deleted_submatrix(const MatrixX& A, Index k);

}  // namespace sphconv

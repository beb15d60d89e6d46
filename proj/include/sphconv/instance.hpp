#pragma once

#include "sphconv/types.hpp"

namespace sphconv {

/// The quadratic f(x) = <Ax,x> + <b,x> + c restricted to the sphere.
///
/// A is symmetrized on construction as (A + A^T)/2; the largest input
/// asymmetry is kept so reports can flag noisy inputs.
class QuadraticInstance {
 public:
  QuadraticInstance(MatrixX A, VectorX b, double c = 0.0);

  Index dim() const { return A_.rows(); }
  const MatrixX& A() const { return A_; }
  const VectorX& b() const { return b_; }
  double c() const { return c_; }

  double max_input_asymmetry() const { return max_asymmetry_; }
  bool asymmetry_warning() const { return max_asymmetry_ > kAsymmetryTol; }

  double value(const VectorX& x) const;

  /// 1 + |A|_F + |b|, the scale used by every certificate tolerance.
  double scale() const;
  double cert_tol() const { return kCertRelTol * scale(); }

  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }

 private:
  MatrixX A_;
  VectorX b_;
  double c_;
  double max_asymmetry_ = 0.0;
  double lambda_min_ = 0.0;
  double lambda_max_ = 0.0;
};

/// f_{A - lambda I, b, c}. Spherical convexity is unchanged by the shift.
QuadraticInstance shift(const QuadraticInstance& inst, double lambda);

// Entry-pattern predicates used to gate the pattern certificates.
bool is_zero_matrix(const MatrixX& A, double tol = kPatternTol);
bool is_diagonal(const MatrixX& A, double tol = kPatternTol);
bool is_z_matrix(const MatrixX& A, double tol = kPatternTol);

}  // namespace sphconv

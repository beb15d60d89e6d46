#pragma once

#include "sphconv/types.hpp"

#include <vector>

namespace sphconv {

/// Nonnegative least squares: argmin |G z - x| subject to z >= 0
/// (Lawson-Hanson active set).
VectorX nnls(const MatrixX& G, const VectorX& x);

/// A pointed polyhedral cone: the nonnegative orthant, or the conic hull of
/// a finite generator list.
class Cone {
 public:
  enum class Kind { NonnegOrthant, Generated };

  static Cone orthant(Index n);
  /// Throws InputError for zero generators, mixed dimensions, or a cone that
  /// is not pointed.
  static Cone generated(const std::vector<VectorX>& generators);

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  /// Generator columns (n x m); empty for the orthant.
  const MatrixX& generators() const { return generators_; }

  bool contains(const VectorX& x, double tol = kConeTol) const;
  /// y in K*: <y,k> >= 0 for all k in K.
  bool dual_contains(const VectorX& y, double tol = kConeTol) const;
  /// y in the polar cone: <y,k> <= 0 for all k in K.
  bool polar_contains(const VectorX& y, double tol = kConeTol) const;

  /// The orthant is a subset of this cone.
  bool contains_orthant() const;
  /// This cone is a subset of the orthant.
  bool within_orthant() const;
  /// Equal to the orthant (either kind).
  bool is_orthant() const { return contains_orthant() && within_orthant(); }

 private:
  Cone(Kind kind, Index dim, MatrixX generators);

  Kind kind_;
  Index dim_;
  MatrixX generators_;
  bool contains_orthant_ = false;
  bool within_orthant_ = false;
};

}  // namespace sphconv

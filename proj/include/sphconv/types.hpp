#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace sphconv {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixX = Matrix<double>;
using VectorX = Vector<double>;

// Unit-norm and orthogonality slack accepted for witness pairs.
inline constexpr double kUnitTol = 1e-12;
// Coordinates of an orthant point may dip this far below zero.
inline constexpr double kConeTol = 1e-10;
// Entry-pattern gates (Z-matrix, diagonal, rank-one patterns).
inline constexpr double kPatternTol = 1e-14;
// Ties between diagonal entries (argmin membership, constant tails).
inline constexpr double kTieTol = 1e-10;
// Relative tolerance for certificate inequalities, scaled by 1+|A|_F+|b|.
inline constexpr double kCertRelTol = 1e-10;
// A negative certificate must carry a witness below this slack.
inline constexpr double kWitnessTol = 1e-12;
// Recorded when symmetrizing A on construction.
inline constexpr double kAsymmetryTol = 1e-12;

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for malformed instances, cones, or input files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The projection formula requires a positive definite matrix.
class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sphconv

#pragma once

// The certificate battery. Every certificate takes an instance and a cone
// and returns a CertificateOutcome. Hypothesis failures give NotApplicable;
// a ProvesNonConvex outcome always carries a witness pair whose slack is
// below -1e-12.
//
// An inequality "lhs <= rhs" counts as violated only when lhs - rhs exceeds
// rel_tol * (1 + |A|_F + |b|).

#include "sphconv/copositivity.hpp"
#include "sphconv/witness.hpp"

#include <cstdint>

namespace sphconv {

struct CertOptions {
  double rel_tol = kCertRelTol;
  int copositivity_budget = 64;
  std::uint64_t copositivity_seed = 0x5eedc0b0ULL;
};

/// sqrt(6 sqrt(3) - 9), the tail constant of the positive-component bound.
double bipos_beta();

// Exact characterizations (when their pattern applies).
CertificateOutcome cert_affine(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_diag_iff(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_rank_one_basis(const QuadraticInstance&, const Cone&, const CertOptions& = {});

// Sufficient conditions.
CertificateOutcome cert_gap_sufficient(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_copositive_chain(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_zmatrix(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_bipos(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_offdiag_pair(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_decomposition(const QuadraticInstance&, const Cone&, const CertOptions& = {});

// Necessary conditions (negative certificates).
CertificateOutcome cert_offdiag_mix(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_pair_sums(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_pair_vs_offdiag(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_bminus_positive(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_prop_b(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_deleted_submatrix(const QuadraticInstance&, const Cone&, const CertOptions& = {});
CertificateOutcome cert_theta_scan(const QuadraticInstance&, const Cone&, const CertOptions& = {});

/// The copositivity chain on the orthant:
///   (i)   diag^2(A) - A copositive and b_i <= 2[lambda_min - a_ii]
///   (ii)  2[lambda_min I - A] - diag(b) copositive and b <= 0
///   (iii) b_i <= 2[lambda_min - a_ii]
/// with (i) => (ii) => convex and (ii) => (iii).
struct SuffdConditions {
  Copositivity diag_gap_copositivity = Copositivity::Unknown;  // diag^2(A) - A
  Copositivity shifted_copositivity = Copositivity::Unknown;   // 2[lmin I - A] - diag(b)
  bool b_nonpositive = false;
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
};

SuffdConditions suffd_conditions(const QuadraticInstance& inst, const CertOptions& = {});

/// Minimum over theta in [0, pi/2] of the first-order slack at the rotated
/// pair (i, j); 1024-point grid refined by golden-section search.
struct ThetaMinimum {
  double theta = 0.0;
  double slack = 0.0;
};

ThetaMinimum theta_scan_pair(const QuadraticInstance& inst, Index i, Index j);

/// The bound vectors of the decomposition certificate, for auditing:
/// (iii) -2 a_kk^+ - 2 sum_{i != k} a_ii^- - 4 sum_{i != j} |a_ij| and the
/// sharper (ii) with 4 sum a_ij^+ + 2 sum a_ij^-. Off-diagonal sums run over
/// ordered pairs.
struct DecompositionBounds {
  VectorX bound_iii;
  VectorX bound_ii;
};

DecompositionBounds decomposition_bounds(const MatrixX& A);

}  // namespace sphconv

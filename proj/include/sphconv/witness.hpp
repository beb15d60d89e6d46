#pragma once

#include "sphconv/cone.hpp"
#include "sphconv/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphconv {

/// An orthonormal pair (u, v), v in the cone, with its first-order slack.
/// A negative slack disproves spherical convexity.
struct WitnessPair {
  VectorX u;
  VectorX v;
  double slack = 0.0;
};

/// Builds a witness, renormalizing (u, v) if they are within 1e-8 of an
/// orthonormal pair and recomputing the slack from the instance. Throws
/// ContractViolation otherwise or when v is outside the cone.
WitnessPair make_witness(const QuadraticInstance& inst, const Cone& cone,
                         VectorX u, VectorX v);

/// Recomputes the slack independently and checks every pair invariant.
bool revalidate(const QuadraticInstance& inst, const Cone& cone,
                const WitnessPair& w, double max_slack);

enum class CertVerdict { ProvesConvex, ProvesNonConvex, NotApplicable, Inconclusive };

std::string_view to_string(CertVerdict v);

struct CertificateOutcome {
  std::string name;
  CertVerdict verdict = CertVerdict::Inconclusive;
  std::optional<WitnessPair> witness;
  std::string note;
  std::vector<std::pair<std::string, double>> values;

  bool conclusive() const {
    return verdict == CertVerdict::ProvesConvex ||
           verdict == CertVerdict::ProvesNonConvex;
  }
};

}  // namespace sphconv

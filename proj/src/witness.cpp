#include "sphconv/witness.hpp"

#include "sphconv/slack.hpp"

#include <cmath>

namespace sphconv {

WitnessPair make_witness(const QuadraticInstance& inst, const Cone& cone,
                         VectorX u, VectorX v) {
  if (u.size() != inst.dim() || v.size() != inst.dim()) {
    throw ContractViolation("witness: dimension mismatch");
  }
  constexpr double near = 1e-8;
  if (std::abs(u.norm() - 1.0) > near || std::abs(v.norm() - 1.0) > near ||
      std::abs(u.dot(v)) > near) {
    throw ContractViolation("witness: (u, v) is not an orthonormal pair");
  }
  v.normalize();
  u -= u.dot(v) * v;
  u.normalize();
  if (!cone.contains(v)) throw ContractViolation("witness: v is outside the cone");
  WitnessPair w{std::move(u), std::move(v), 0.0};
  w.slack = foc_slack(inst, w.u, w.v);
  return w;
}

bool revalidate(const QuadraticInstance& inst, const Cone& cone,
                const WitnessPair& w, double max_slack) {
  if (w.u.size() != inst.dim() || w.v.size() != inst.dim()) return false;
  if (std::abs(w.u.norm() - 1.0) > kUnitTol) return false;
  if (std::abs(w.v.norm() - 1.0) > kUnitTol) return false;
  if (std::abs(w.u.dot(w.v)) > kUnitTol) return false;
  if (!cone.contains(w.v)) return false;
  const auto& A = inst.A();
  const double slack =
      w.u.dot(A * w.u) - w.v.dot(A * w.v) - 0.5 * inst.b().dot(w.v);
  if (std::abs(slack - w.slack) > 1e-12 * inst.scale()) return false;
  return slack < max_slack;
}

std::string_view to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::ProvesConvex: return "ProvesConvex";
    case CertVerdict::ProvesNonConvex: return "ProvesNonConvex";
    case CertVerdict::NotApplicable: return "NotApplicable";
    case CertVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace sphconv

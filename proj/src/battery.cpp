#include "sphconv/battery.hpp"

#include <algorithm>

namespace sphconv {

std::string_view to_string(CertKind k) {
  switch (k) {
    case CertKind::Exact: return "exact";
    case CertKind::Sufficient: return "sufficient";
    case CertKind::Necessary: return "necessary";
  }
  return "necessary";
}

std::string_view to_string(BatteryVerdict v) {
  switch (v) {
    case BatteryVerdict::ProvesConvex: return "ProvesConvex";
    case BatteryVerdict::ProvesNonConvex: return "ProvesNonConvex";
    case BatteryVerdict::Inconclusive: return "Inconclusive";
    case BatteryVerdict::Contradiction: return "Contradiction";
  }
  return "Inconclusive";
}

const std::vector<CertificateEntry>& certificate_registry() {
  static const std::vector<CertificateEntry> registry = {
      {"thlt.i.affine", CertKind::Exact, cert_affine},
      {"iffdiag", CertKind::Exact, cert_diag_iff},
      {"lemd.rank1", CertKind::Exact, cert_rank_one_basis},
      {"thlt.vi.gap", CertKind::Sufficient, cert_gap_sufficient},
      {"suffd.ii", CertKind::Sufficient, cert_copositive_chain},
      {"cor.zmatrix", CertKind::Sufficient, cert_zmatrix},
      {"bipos", CertKind::Sufficient, cert_bipos},
      {"lemndp.pair", CertKind::Sufficient, cert_offdiag_pair},
      {"cd.iii", CertKind::Sufficient, cert_decomposition},
      {"thlt.ii.mix", CertKind::Necessary, cert_offdiag_mix},
      {"thlt.iii.pairsum", CertKind::Necessary, cert_pair_sums},
      {"thlt.iv.sup", CertKind::Necessary, cert_pair_vs_offdiag},
      {"thlt.v.bminus", CertKind::Necessary, cert_bminus_positive},
      {"propb", CertKind::Necessary, cert_prop_b},
      {"prop.deleted", CertKind::Necessary, cert_deleted_submatrix},
      {"theta", CertKind::Necessary, cert_theta_scan},
  };
  return registry;
}

const CertificateEntry* find_certificate(std::string_view name) {
  for (const CertificateEntry& e : certificate_registry())
    if (e.name == name) return &e;
  return nullptr;
}

BatteryResult run_battery(const QuadraticInstance& inst, const Cone& cone,
                          const BatteryConfig& config) {
  if (cone.dim() != inst.dim()) throw InputError("cone dimension does not match the instance");
  for (const std::string& name : config.only) {
    if (!find_certificate(name)) throw InputError("unknown certificate: " + name);
  }

  BatteryResult result;
  bool convex = false, nonconvex = false;
  for (const CertificateEntry& entry : certificate_registry()) {
    if (!config.only.empty() &&
        std::find(config.only.begin(), config.only.end(), entry.name) == config.only.end()) {
      continue;
    }
    CertificateOutcome out = entry.run(inst, cone, config.options);
    out.name = entry.name;
    if (out.verdict == CertVerdict::ProvesConvex) convex = true;
    if (out.verdict == CertVerdict::ProvesNonConvex) nonconvex = true;
    const bool conclusive = out.conclusive();
    if (conclusive && result.decided_by.empty()) result.decided_by = entry.name;
    result.outcomes.push_back(std::move(out));
    if (conclusive && !config.exhaustive) break;
  }

  if (convex && nonconvex) {
    result.verdict = BatteryVerdict::Contradiction;
  } else if (nonconvex) {
    result.verdict = BatteryVerdict::ProvesNonConvex;
  } else if (convex) {
    result.verdict = BatteryVerdict::ProvesConvex;
  }
  return result;
}

}  // namespace sphconv

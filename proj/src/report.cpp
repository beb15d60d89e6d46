#include "sphconv/report.hpp"

#include "sphconv/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace sphconv {

using nlohmann::json;

std::string_view to_string(AggregateVerdict v) {
  switch (v) {
    case AggregateVerdict::ConvexCertified: return "ConvexCertified";
    case AggregateVerdict::NonConvexCertified: return "NonConvexCertified";
    case AggregateVerdict::NumericallyConvex: return "NumericallyConvex";
    case AggregateVerdict::Inconclusive: return "Inconclusive";
    case AggregateVerdict::Contradiction: return "Contradiction";
  }
  return "Inconclusive";
}

int exit_code(AggregateVerdict v) {
  switch (v) {
    case AggregateVerdict::ConvexCertified: return 0;
    case AggregateVerdict::NonConvexCertified: return 1;
    case AggregateVerdict::NumericallyConvex: return 2;
    case AggregateVerdict::Inconclusive: return 3;
    case AggregateVerdict::Contradiction: return 70;
  }
  return 70;
}

std::uint64_t fnv1a(const double* data, std::size_t count) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < count * sizeof(double); ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

void aggregate(VerificationReport& report, const QuadraticInstance& inst, const Cone& cone) {
  report.witness.reset();
  report.witness_source.clear();
  report.diagnostic.clear();

  const BatteryVerdict bv = report.battery.verdict;
  const bool oracle_falsified = report.oracle.status == OracleStatus::FalsifiedNonConvex;

  if (bv == BatteryVerdict::Contradiction) {
    report.verdict = AggregateVerdict::Contradiction;
    report.diagnostic = "certificates disagree";
    return;
  }
  if (bv == BatteryVerdict::ProvesConvex && oracle_falsified) {
    report.verdict = AggregateVerdict::Contradiction;
    report.diagnostic = "certificate " + report.battery.decided_by +
                        " proves convexity but the oracle found a witness";
    return;
  }

  if (bv == BatteryVerdict::ProvesNonConvex) {
    for (const CertificateOutcome& out : report.battery.outcomes) {
      if (out.verdict != CertVerdict::ProvesNonConvex) continue;
      if (!out.witness || !revalidate(inst, cone, *out.witness, -kWitnessTol)) {
        report.verdict = AggregateVerdict::Contradiction;
        report.diagnostic = "witness of " + out.name + " does not re-validate";
        return;
      }
      if (!report.witness) {
        report.witness = out.witness;
        report.witness_source = out.name;
      }
    }
    report.verdict = AggregateVerdict::NonConvexCertified;
    return;
  }
  if (oracle_falsified) {
    if (!report.oracle.witness ||
        !revalidate(inst, cone, *report.oracle.witness, -kWitnessTol)) {
      report.verdict = AggregateVerdict::Contradiction;
      report.diagnostic = "oracle witness does not re-validate";
      return;
    }
    report.witness = report.oracle.witness;
    report.witness_source = "oracle:" + report.oracle.found_by;
    report.verdict = AggregateVerdict::NonConvexCertified;
    return;
  }
  if (bv == BatteryVerdict::ProvesConvex) {
    report.verdict = AggregateVerdict::ConvexCertified;
    return;
  }
  report.verdict = report.oracle.status == OracleStatus::NumericallyConvex
                       ? AggregateVerdict::NumericallyConvex
                       : AggregateVerdict::Inconclusive;
}

namespace {

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json oracle_to_json(const OracleVerdict& v) {
  json out;
  out["status"] = std::string(to_string(v.status));
  out["pairs_checked"] = v.pairs_checked;
  out["structured_pairs"] = v.structured_pairs;
  out["tol"] = v.tol;
  out["min_slack"] = finite_or_null(v.min_slack);
  out["min_bx_slack"] = finite_or_null(v.min_bx_slack);
  out["h_evaluated"] = v.h_evaluated;
  out["min_h"] = finite_or_null(v.min_h);
  out["min_h_point"] = v.min_h_point.size() ? vector_to_json(v.min_h_point) : json(nullptr);
  out["found_by"] = v.found_by.empty() ? json(nullptr) : json(v.found_by);
  out["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  return out;
}

json report_to_json(const VerificationReport& report, const QuadraticInstance& inst,
                    const Cone& cone) {
  json out;
  out["schema"] = kReportSchema;
  out["tool_version"] = std::string(kToolVersion);
  out["seed"] = report.seed;

  const MatrixX& A = inst.A();
  const double c = inst.c();
  out["instance"] = {
      {"n", inst.dim()},
      {"hash_A", hex(fnv1a(A.data(), static_cast<std::size_t>(A.size())))},
      {"hash_b", hex(fnv1a(inst.b().data(), static_cast<std::size_t>(inst.b().size())))},
      {"hash_c", hex(fnv1a(&c, 1))},
      {"cone", cone.kind() == Cone::Kind::NonnegOrthant ? "nonneg_orthant" : "generated"},
      {"asymmetry_warning", inst.asymmetry_warning()},
      {"max_input_asymmetry", inst.max_input_asymmetry()},
  };

  json certs = json::array();
  for (const CertificateOutcome& o : report.battery.outcomes) {
    json values = json::object();
    for (const auto& [key, value] : o.values) values[key] = finite_or_null(value);
    const CertificateEntry* entry = find_certificate(o.name);
    certs.push_back({
        {"name", o.name},
        {"kind", entry ? std::string(to_string(entry->kind)) : std::string("unknown")},
        {"verdict", std::string(to_string(o.verdict))},
        {"note", o.note},
        {"values", std::move(values)},
        {"witness", o.witness ? witness_to_json(*o.witness) : json(nullptr)},
    });
  }
  out["certificates"] = std::move(certs);
  out["battery"] = {
      {"verdict", std::string(to_string(report.battery.verdict))},
      {"decided_by", report.battery.decided_by.empty() ? json(nullptr) : json(report.battery.decided_by)},
      {"exhaustive", report.exhaustive},
  };
  out["oracle"] = oracle_to_json(report.oracle);
  out["verdict"] = std::string(to_string(report.verdict));
  out["exit_code"] = exit_code(report.verdict);
  out["witness"] = report.witness ? witness_to_json(*report.witness) : json(nullptr);
  out["witness_source"] = report.witness_source.empty() ? json(nullptr) : json(report.witness_source);
  if (!report.diagnostic.empty()) out["diagnostic"] = report.diagnostic;
  out["timing"] = {{"battery_seconds", report.battery_seconds},
                   {"oracle_seconds", report.oracle_seconds}};
  return out;
}

}  // namespace sphconv

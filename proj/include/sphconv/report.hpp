#pragma once

#include "sphconv/battery.hpp"
#include "sphconv/oracle.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sphconv {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class AggregateVerdict {
  ConvexCertified,
  NonConvexCertified,
  NumericallyConvex,
  Inconclusive,
  Contradiction,
};

std::string_view to_string(AggregateVerdict v);

/// 0, 1, 2, 3 for the four verdicts; 70 for a contradiction.
int exit_code(AggregateVerdict v);

/// FNV-1a over the raw bytes of the values.
std::uint64_t fnv1a(const double* data, std::size_t count);

struct VerificationReport {
  std::uint64_t seed = 0;
  BatteryResult battery;
  bool exhaustive = false;
  OracleVerdict oracle;
  AggregateVerdict verdict = AggregateVerdict::Inconclusive;
  /// The witness behind a NonConvexCertified verdict.
  std::optional<WitnessPair> witness;
  std::string witness_source;
  std::string diagnostic;
  double battery_seconds = 0.0;
  double oracle_seconds = 0.0;
};

/// Precedence: contradiction, then any proof of non-convexity (battery or
/// oracle witness, re-validated), then any proof of convexity, then the
/// oracle's numerical verdict, else Inconclusive.
void aggregate(VerificationReport& report, const QuadraticInstance& inst, const Cone& cone);

nlohmann::json report_to_json(const VerificationReport& report, const QuadraticInstance& inst,
                              const Cone& cone);

nlohmann::json oracle_to_json(const OracleVerdict& v);

}  // namespace sphconv

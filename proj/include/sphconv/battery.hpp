#pragma once

#include "sphconv/certificates.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sphconv {

enum class CertKind { Exact, Sufficient, Necessary };

std::string_view to_string(CertKind k);

using CertificateFn =
    std::function<CertificateOutcome(const QuadraticInstance&, const Cone&, const CertOptions&)>;

struct CertificateEntry {
  std::string name;
  CertKind kind;
  CertificateFn run;
};

/// Every certificate, exact first, then sufficient, then necessary.
const std::vector<CertificateEntry>& certificate_registry();

const CertificateEntry* find_certificate(std::string_view name);

struct BatteryConfig {
  CertOptions options;
  /// Run every certificate instead of stopping at the first conclusive one.
  bool exhaustive = false;
  /// Restrict to these registry names (empty runs all).
  std::vector<std::string> only;
};

enum class BatteryVerdict { ProvesConvex, ProvesNonConvex, Inconclusive, Contradiction };

std::string_view to_string(BatteryVerdict v);

struct BatteryResult {
  std::vector<CertificateOutcome> outcomes;  // registry order
  BatteryVerdict verdict = BatteryVerdict::Inconclusive;
  /// Name of the first conclusive certificate, if any.
  std::string decided_by;
};

BatteryResult run_battery(const QuadraticInstance& inst, const Cone& cone,
                          const BatteryConfig& config = {});

}  // namespace sphconv

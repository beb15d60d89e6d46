#pragma once

// Numerical evidence for or against spherical convexity. Nothing here is a
// proof: a negative slack found by search is a genuine witness, but a clean
// search only makes convexity numerically plausible.

#include "sphconv/sampling.hpp"
#include "sphconv/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sphconv {

struct OracleConfig {
  std::uint64_t seed = 0;
  long long pair_budget = 100000;
  int multistart_count = 32;
  /// Relative; the effective tolerance is tol * (1 + |A|_F + |b|).
  double tol = 1e-9;
  int descent_max_iters = 500;
  /// Worker threads for the random phase; 0 reads SPHCONV_THREADS, then
  /// falls back to the hardware concurrency.
  int threads = 0;
};

/// Validates a config (positive budgets and tolerance). Throws InputError.
void validate(const OracleConfig& config);

/// Worker count: explicit request, else SPHCONV_THREADS, else hardware.
int resolve_threads(int requested);

enum class OracleStatus { FalsifiedNonConvex, NumericallyConvex, Exhausted };

std::string_view to_string(OracleStatus s);

struct OracleVerdict {
  OracleStatus status = OracleStatus::Exhausted;
  std::optional<WitnessPair> witness;
  /// "structured", "random", "random-bx" or "h".
  std::string found_by;
  double min_slack = INFINITY;
  double min_bx_slack = INFINITY;
  double min_h = INFINITY;
  VectorX min_h_point;
  bool h_evaluated = false;
  long long pairs_checked = 0;
  long long structured_pairs = 0;
  double tol = 0.0;
};

/// Structured pairs first (basis, rotated, theta minimizers, restricted
/// eigenvectors at cone rays), then pair_budget random draws in batches of
/// kOracleBatch with per-batch child seeds. A quarter of the random draws
/// test the non-orthogonal (x, v) form instead. With a clean search and a
/// positive budget, minimize_h runs as well. A zero budget checks only the
/// structured pairs and reports Exhausted unless one of them fails.
OracleVerdict falsify(const QuadraticInstance& inst, const Cone& cone,
                      const OracleConfig& config = {});

inline constexpr long long kOracleBatch = 4096;

/// h(x) = min_{u orthogonal to x} <Au,u> - <Ax,x> - <b,x>/2 for unit x in K.
/// f is spherically convex iff h >= 0 on the sphere within K.
double pointwise_h(const QuadraticInstance& inst, const Cone& cone, const VectorX& x);

struct HMinimum {
  double value = INFINITY;
  VectorX point;
  /// The minimizing u orthogonal to point; (direction, point) is a pair
  /// whose first-order slack equals value.
  VectorX direction;
};

/// Multistart pattern search of h over the chart x = w^2/|w^2| (orthant
/// cones), from every e^i, the uniform vector, `extra_starts`, and
/// multistart_count cone samples. Other cones use the best of sampled points.
HMinimum minimize_h(const QuadraticInstance& inst, const Cone& cone,
                    const OracleConfig& config,
                    const std::vector<VectorX>& extra_starts = {});

struct GeodesicScan {
  std::optional<WitnessPair> witness;
  double min_second_derivative = INFINITY;
  int geodesics = 0;
};

/// Random geodesic arcs inside the orthant; (f o gamma)'' checked on a
/// 64-point grid per arc. A value below -tol yields the witness
/// (gamma'(t), gamma(t)).
GeodesicScan geodesic_scan(const QuadraticInstance& inst, const Cone& cone,
                           const OracleConfig& config, int geodesics = 1000);

/// Largest t such that cos(s) x + sin(s) v stays in the orthant on [0, t],
/// capped at pi.
double orthant_arc_length(const VectorX& x, const VectorX& v);

struct LiminfEstimate {
  std::vector<double> steps;      // t levels
  std::vector<double> level_min;  // minimum quotient per level
  double estimate = INFINITY;     // minimum at the finest level
};

/// Difference quotients <A(y-x), y-x>/|y-x|^2 at y = (x+tw)/|x+tw| for
/// random unit w. x must be interior (orthant coordinates >= 1e-6).
LiminfEstimate liminf_estimate(const QuadraticInstance& inst, const Cone& cone,
                               const VectorX& x, const OracleConfig& config,
                               int samples = 10000);

struct DescentRun {
  double value = 0.0;
  VectorX point;
  int iterations = 0;
};

/// Projected Riemannian gradient descent of f over the sphere within the
/// orthant from `starts` points (every e^i, the uniform vector, then cone
/// samples). Returns each start's final value and point.
std::vector<DescentRun> minimize_f_demo(const QuadraticInstance& inst, const Cone& cone,
                                        const OracleConfig& config, int starts = 20,
                                        int max_iters = 20000);

}  // namespace sphconv

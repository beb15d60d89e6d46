#include "sphconv/oracle.hpp"

#include "sphconv/linalg.hpp"
#include "sphconv/slack.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace sphconv {

std::string_view to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::FalsifiedNonConvex: return "FalsifiedNonConvex";
    case OracleStatus::NumericallyConvex: return "NumericallyConvex";
    case OracleStatus::Exhausted: return "Exhausted";
  }
  return "Exhausted";
}

void validate(const OracleConfig& config) {
  if (config.pair_budget < 0) throw InputError("oracle: pair_budget must be nonnegative");
  if (config.multistart_count <= 0) throw InputError("oracle: multistart_count must be positive");
  if (config.descent_max_iters <= 0) throw InputError("oracle: descent_max_iters must be positive");
  if (!(config.tol > 0.0)) throw InputError("oracle: tol must be positive");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPHCONV_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Separate streams so the random phase, h starts and demos never share draws.
constexpr std::uint64_t kHStream = 0x6a09e667f3bcc908ULL;
constexpr std::uint64_t kGeodesicStream = 0xbb67ae8584caa73bULL;
constexpr std::uint64_t kLiminfStream = 0x3c6ef372fe94f82bULL;
constexpr std::uint64_t kDemoStream = 0xa54ff53a5f1d36f1ULL;

double raw_slack(const MatrixX& A, const VectorX& b, const VectorX& u, const VectorX& v) {
  return u.dot(A * u) - v.dot(A * v) - 0.5 * b.dot(v);
}

struct Pair {
  VectorX u;
  VectorX v;
};

VectorX basis(Index n, Index i) { return VectorX::Unit(n, i); }

VectorX combo(Index n, Index i, double si, Index j, double sj) {
  VectorX x = VectorX::Zero(n);
  x(i) = si;
  x(j) = sj;
  return x.normalized();
}

// Minimum of the first-order slack over the rotated pairs of (i, j).
Pair theta_minimizer(const QuadraticInstance& inst, Index i, Index j) {
  const Index n = inst.dim();
  auto pair_at = [&](double t) {
    Pair p{VectorX::Zero(n), VectorX::Zero(n)};
    p.u(i) = std::cos(t);
    p.u(j) = -std::sin(t);
    p.v(i) = std::sin(t);
    p.v(j) = std::cos(t);
    return p;
  };
  auto value = [&](double t) {
    const Pair p = pair_at(t);
    return raw_slack(inst.A(), inst.b(), p.u, p.v);
  };
  constexpr int kGrid = 512;
  const double h = (std::numbers::pi / 2.0) / kGrid;
  int best = 0;
  double best_val = value(0.0);
  for (int k = 1; k <= kGrid; ++k) {
    const double val = value(k * h);
    if (val < best_val) {
      best_val = val;
      best = k;
    }
  }
  double lo = std::max(0, best - 1) * h, hi = std::min(kGrid, best + 1) * h;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (value(m1) < value(m2)) hi = m2;
    else lo = m1;
  }
  const double t = 0.5 * (lo + hi);
  return pair_at(value(t) < best_val ? t : best * h);
}

std::vector<Pair> structured_pairs(const QuadraticInstance& inst, const Cone& cone) {
  const Index n = inst.dim();
  const double r = std::numbers::sqrt2 / 2.0;
  std::vector<Pair> pairs;
  std::vector<VectorX> rays;

  if (cone.contains_orthant() || cone.kind() == Cone::Kind::NonnegOrthant) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j)
        if (i != j) pairs.push_back({basis(n, i), basis(n, j)});
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        pairs.push_back({combo(n, i, r, j, -r), combo(n, i, r, j, r)});
        for (Index k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          pairs.push_back({basis(n, k), combo(n, i, r, j, r)});
          pairs.push_back({combo(n, i, r, j, -r), basis(n, k)});
          pairs.push_back({combo(n, i, r, j, r), basis(n, k)});
        }
      }
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j)
        if (i != j) pairs.push_back(theta_minimizer(inst, i, j));
    }
    for (Index i = 0; i < n; ++i) rays.push_back(basis(n, i));
  }
  if (cone.kind() == Cone::Kind::Generated) {
    const MatrixX& G = cone.generators();
    for (Index k = 0; k < G.cols(); ++k) rays.push_back(G.col(k).normalized());
    for (Index k = 0; k < G.cols(); ++k) {
      for (Index l = k + 1; l < G.cols(); ++l) {
        const VectorX mid = G.col(k).normalized() + G.col(l).normalized();
        if (mid.norm() > 1e-12) rays.push_back(mid.normalized());
      }
    }
  }
  for (const VectorX& v : rays) {
    pairs.push_back({restricted_min_pair(inst.A(), v).vector.normalized(), v});
    const MatrixX B = complement_basis(v);
    for (Index k = 0; k < B.cols(); ++k) pairs.push_back({B.col(k), v});
  }
  return pairs;
}

struct BatchResult {
  double min_slack = INFINITY;
  double min_bx = INFINITY;
  VectorX best_v;
  long long violation_index = -1;  // within the batch
  std::optional<Pair> violation;
  bool violation_bx = false;
};

BatchResult run_batch(const QuadraticInstance& inst, const Cone& cone, std::uint64_t seed,
                      long long count, double tol) {
  Rng rng(seed);
  const Index n = inst.dim();
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  BatchResult out;
  for (long long k = 0; k < count; ++k) {
    const VectorX x = sample_unit_in_cone(cone, rng);
    double slack;
    Pair pair;
    bool bx = false;
    if (k % 4 == 3) {
      // Non-orthogonal form: the slack at (x, v) equals the first-order
      // slack of (u, x) with u the normalized component of v orthogonal to x.
      const VectorX v = sample_unit(n, rng);
      const double s = v.dot(x);
      if (std::abs(s) >= 1.0 - 1e-9) continue;
      slack = bx_slack(inst, x, v);
      out.min_bx = std::min(out.min_bx, slack);
      pair = {(v - s * x).normalized(), x};
      bx = true;
    } else {
      const VectorX u = sample_orthogonal_partner(x, rng);
      slack = raw_slack(A, b, u, x);
      pair = {u, x};
    }
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.best_v = x;
    }
    if (slack < -tol) {
      out.violation_index = k;
      out.violation = std::move(pair);
      out.violation_bx = bx;
      return out;
    }
  }
  return out;
}

}  // namespace

OracleVerdict falsify(const QuadraticInstance& inst, const Cone& cone,
                      const OracleConfig& config) {
  validate(config);
  if (cone.dim() != inst.dim()) throw InputError("cone dimension does not match the instance");
  OracleVerdict out;
  out.tol = config.tol * inst.scale();
  const double tol = out.tol;
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();

  // Structured phase: every pair is evaluated and the most negative kept.
  std::optional<Pair> best_structured;
  double best_structured_slack = INFINITY;
  for (const Pair& p : structured_pairs(inst, cone)) {
    if (!cone.contains(p.v)) continue;
    ++out.structured_pairs;
    const double slack = raw_slack(A, b, p.u, p.v);
    if (slack < best_structured_slack - 1e-15 * inst.scale()) {
      best_structured_slack = slack;
      best_structured = p;
    }
  }
  out.pairs_checked = out.structured_pairs;
  out.min_slack = best_structured_slack;
  if (best_structured && best_structured_slack < -tol) {
    out.witness = make_witness(inst, cone, best_structured->u, best_structured->v);
    out.status = OracleStatus::FalsifiedNonConvex;
    out.found_by = "structured";
    return out;
  }
  std::vector<VectorX> h_starts;
  if (best_structured) h_starts.push_back(best_structured->v);

  // Random phase in waves of batches; reduction in batch order.
  const long long batches = (config.pair_budget + kOracleBatch - 1) / kOracleBatch;
  const int workers = resolve_threads(config.threads);
  VectorX best_v;
  double best_random = INFINITY;
  for (long long first = 0; first < batches; first += workers) {
    const long long last = std::min(batches, first + workers);
    std::vector<BatchResult> results(static_cast<std::size_t>(last - first));
    auto work = [&](long long idx) {
      const long long count = std::min(kOracleBatch, config.pair_budget - idx * kOracleBatch);
      results[static_cast<std::size_t>(idx - first)] =
          run_batch(inst, cone, child_seed(config.seed, static_cast<std::uint64_t>(idx)), count, tol);
    };
    if (last - first == 1) {
      work(first);
    } else {
      std::vector<std::thread> pool;
      for (long long idx = first; idx < last; ++idx) pool.emplace_back(work, idx);
      for (std::thread& t : pool) t.join();
    }
    for (long long idx = first; idx < last; ++idx) {
      BatchResult& r = results[static_cast<std::size_t>(idx - first)];
      out.min_bx_slack = std::min(out.min_bx_slack, r.min_bx);
      if (r.min_slack < best_random) {
        best_random = r.min_slack;
        best_v = r.best_v;
      }
      out.min_slack = std::min(out.min_slack, r.min_slack);
      if (r.violation) {
        out.pairs_checked += r.violation_index + 1;
        out.witness = make_witness(inst, cone, r.violation->u, r.violation->v);
        out.status = OracleStatus::FalsifiedNonConvex;
        out.found_by = r.violation_bx ? "random-bx" : "random";
        return out;
      }
      out.pairs_checked += std::min(kOracleBatch, config.pair_budget - idx * kOracleBatch);
    }
  }

  if (config.pair_budget == 0) {
    out.status = OracleStatus::Exhausted;
    return out;
  }

  if (best_v.size() == inst.dim()) h_starts.push_back(best_v);
  const HMinimum h = minimize_h(inst, cone, config, h_starts);
  out.h_evaluated = true;
  out.min_h = h.value;
  out.min_h_point = h.point;
  if (h.value < -tol) {
    out.witness = make_witness(inst, cone, h.direction, h.point);
    out.min_slack = std::min(out.min_slack, out.witness->slack);
    out.status = OracleStatus::FalsifiedNonConvex;
    out.found_by = "h";
    return out;
  }
  out.status = out.min_slack >= -tol ? OracleStatus::NumericallyConvex : OracleStatus::Exhausted;
  return out;
}

double pointwise_h(const QuadraticInstance& inst, const Cone& cone, const VectorX& x) {
  if (x.size() != inst.dim() || std::abs(x.norm() - 1.0) > 1e-8) {
    throw ContractViolation("pointwise_h: x must be a unit vector of matching dimension");
  }
  if (!cone.contains(x)) throw ContractViolation("pointwise_h: x is outside the cone");
  return restricted_lambda_min(inst.A(), x) - x.dot(inst.A() * x) - 0.5 * inst.b().dot(x);
}

namespace {

struct HPoint {
  double value;
  VectorX point;
};

HPoint h_from_chart(const QuadraticInstance& inst, const VectorX& w) {
  VectorX x = w.cwiseProduct(w);
  const double norm = x.norm();
  if (!(norm > 1e-300)) return {INFINITY, x};
  x /= norm;
  const double value =
      restricted_lambda_min(inst.A(), x) - x.dot(inst.A() * x) - 0.5 * inst.b().dot(x);
  return {value, x};
}

// Opportunistic compass search in w.
HPoint pattern_search(const QuadraticInstance& inst, VectorX w, int max_evals) {
  HPoint best = h_from_chart(inst, w);
  int evals = 1;
  double step = 0.25;
  const Index n = w.size();
  while (evals < max_evals && step > 1e-9) {
    bool improved = false;
    for (Index i = 0; i < n && evals < max_evals; ++i) {
      for (double dir : {1.0, -1.0}) {
        VectorX trial = w;
        trial(i) += dir * step;
        const HPoint p = h_from_chart(inst, trial);
        ++evals;
        if (p.value < best.value) {
          best = p;
          w = trial;
          improved = true;
          break;
        }
        if (evals >= max_evals) break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

HMinimum minimize_h(const QuadraticInstance& inst, const Cone& cone,
                    const OracleConfig& config, const std::vector<VectorX>& extra_starts) {
  const Index n = inst.dim();
  std::vector<VectorX> starts = extra_starts;
  Rng rng(child_seed(config.seed ^ kHStream, 0));
  HPoint best{INFINITY, VectorX()};

  if (cone.is_orthant()) {
    for (Index i = 0; i < n; ++i) starts.push_back(basis(n, i));
    starts.push_back(VectorX::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
    for (int k = 0; k < config.multistart_count; ++k) starts.push_back(sample_unit_in_cone(cone, rng));
    for (const VectorX& s : starts) {
      const HPoint p =
          pattern_search(inst, s.cwiseMax(0.0).cwiseSqrt(), config.descent_max_iters);
      if (p.value < best.value) best = p;
    }
  } else {
    if (cone.kind() == Cone::Kind::Generated) {
      const MatrixX& G = cone.generators();
      for (Index k = 0; k < G.cols(); ++k) starts.push_back(G.col(k).normalized());
    }
    const int samples = config.multistart_count * config.descent_max_iters;
    for (int k = 0; k < samples; ++k) starts.push_back(sample_unit_in_cone(cone, rng));
    for (const VectorX& s : starts) {
      if (!cone.contains(s)) continue;
      const double value = pointwise_h(inst, cone, s);
      if (value < best.value) best = {value, s};
    }
  }

  HMinimum out;
  out.value = best.value;
  out.point = best.point;
  if (best.point.size() == n) {
    out.direction = restricted_min_pair(inst.A(), best.point).vector.normalized();
  }
  return out;
}

double orthant_arc_length(const VectorX& x, const VectorX& v) {
  // cos(t) x_i + sin(t) v_i = R cos(t - phi_i) stays >= 0 until phi_i + pi/2.
  double t = std::numbers::pi;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0.0 && v(i) == 0.0) continue;
    t = std::min(t, std::atan2(v(i), x(i)) + std::numbers::pi / 2.0);
  }
  return std::max(t, 0.0);
}

GeodesicScan geodesic_scan(const QuadraticInstance& inst, const Cone& cone,
                           const OracleConfig& config, int geodesics) {
  if (!cone.is_orthant()) throw ContractViolation("geodesic_scan: orthant cone required");
  const double tol = config.tol * inst.scale();
  Rng rng(child_seed(config.seed ^ kGeodesicStream, 0));
  GeodesicScan out;
  constexpr int kGrid = 64;
  for (int g = 0; g < geodesics; ++g) {
    VectorX x, v;
    double span = 0.0;
    // Redraw degenerate arcs so every counted geodesic has a usable span.
    for (int attempt = 0; attempt < 64 && span < 1e-3; ++attempt) {
      x = sample_unit_in_cone(cone, rng);
      v = sample_orthogonal_partner(x, rng);
      span = orthant_arc_length(x, v);
      if (span < 1e-3) {
        // Boundary start heading outward: use the arc towards another cone point.
        const VectorX y = sample_unit_in_cone(cone, rng);
        const VectorX d = y - y.dot(x) * x;
        if (d.norm() < 1e-8) continue;
        v = d.normalized();
        span = orthant_arc_length(x, v);
      }
    }
    if (span < 1e-3) continue;
    ++out.geodesics;
    for (int k = 0; k < kGrid; ++k) {
      const double t = span * k / (kGrid - 1);
      const double g2 = geodesic_second_derivative(inst, x, v, t);
      out.min_second_derivative = std::min(out.min_second_derivative, g2);
      if (g2 < -tol && !out.witness) {
        VectorX point = (std::cos(t) * x + std::sin(t) * v).cwiseMax(0.0);
        point.normalize();
        VectorX dir = -std::sin(t) * x + std::cos(t) * v;
        dir -= dir.dot(point) * point;
        out.witness = make_witness(inst, cone, dir.normalized(), point);
        if (out.witness->slack >= -kWitnessTol) out.witness.reset();
      }
    }
    if (out.witness) break;
  }
  return out;
}

LiminfEstimate liminf_estimate(const QuadraticInstance& inst, const Cone& cone,
                               const VectorX& x, const OracleConfig& config, int samples) {
  if (!cone.is_orthant()) throw ContractViolation("liminf_estimate: orthant cone required");
  if (x.size() != inst.dim() || std::abs(x.norm() - 1.0) > 1e-8 || x.minCoeff() < 1e-6) {
    throw ContractViolation("liminf_estimate: x must be a unit vector interior to the orthant");
  }
  LiminfEstimate out;
  out.steps = {1e-2, 1e-3, 1e-4};
  out.level_min.assign(out.steps.size(), INFINITY);
  Rng rng(child_seed(config.seed ^ kLiminfStream, 0));
  const Index n = inst.dim();
  for (int s = 0; s < samples; ++s) {
    const VectorX w = sample_unit(n, rng);
    for (std::size_t l = 0; l < out.steps.size(); ++l) {
      VectorX y = x + out.steps[l] * w;
      y.normalize();
      if (!cone.contains(y)) continue;
      const VectorX d = y - x;
      const double dd = d.squaredNorm();
      if (dd == 0.0) continue;
      out.level_min[l] = std::min(out.level_min[l], d.dot(inst.A() * d) / dd);
    }
  }
  // Coarser levels carry an O(t |A|) bias; only the finest is reported.
  out.estimate = out.level_min.back();
  return out;
}

std::vector<DescentRun> minimize_f_demo(const QuadraticInstance& inst, const Cone& cone,
                                        const OracleConfig& config, int starts, int max_iters) {
  if (!cone.is_orthant()) throw ContractViolation("minimize_f_demo: orthant cone required");
  const Index n = inst.dim();
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  Rng rng(child_seed(config.seed ^ kDemoStream, 0));

  std::vector<VectorX> points;
  for (Index i = 0; i < n && static_cast<int>(points.size()) < starts; ++i) points.push_back(basis(n, i));
  if (static_cast<int>(points.size()) < starts) {
    points.push_back(VectorX::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
  }
  while (static_cast<int>(points.size()) < starts) points.push_back(sample_unit_in_cone(cone, rng));

  const double lipschitz = 2.0 * A.operatorNorm() + b.norm() + 1.0;
  std::vector<DescentRun> runs;
  for (VectorX x : points) {
    double fx = inst.value(x);
    double step = 1.0 / lipschitz;
    int it = 0;
    for (; it < max_iters; ++it) {
      const VectorX grad = 2.0 * (A * x) + b;
      const VectorX rgrad = grad - grad.dot(x) * x;
      bool moved = false;
      while (step > 1e-18) {
        VectorX next = (x - step * rgrad).cwiseMax(0.0);
        const double norm = next.norm();
        if (norm > 1e-12) {
          next /= norm;
          const double fn = inst.value(next);
          const double decrease = grad.dot(x - next);
          if (fn <= fx - 1e-4 * std::max(decrease, 0.0) && fn < fx) {
            moved = (next - x).norm() > 1e-15;
            x = next;
            fx = fn;
            step *= 1.5;
            break;
          }
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    runs.push_back({fx, x, it});
  }
  return runs;
}

}  // namespace sphconv

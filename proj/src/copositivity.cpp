#include "sphconv/copositivity.hpp"

#include "sphconv/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace sphconv {

std::string_view to_string(Copositivity c) {
  switch (c) {
    case Copositivity::Copositive: return "Copositive";
    case Copositivity::NotCopositive: return "NotCopositive";
    case Copositivity::Unknown: return "Unknown";
  }
  return "Unknown";
}

VectorX project_to_simplex(const VectorX& y) {
  std::vector<double> s(y.data(), y.data() + y.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  double cumsum = 0.0, theta = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    cumsum += s[k];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (s[k] - t > 0.0) theta = t;
  }
  return (y.array() - theta).max(0.0).matrix();
}

namespace {

constexpr double kSearchThreshold = -1e-10;

CopositivityResult not_copositive(VectorX x, const MatrixX& M,
                                  std::string_view step) {
  x.normalize();
  CopositivityResult r;
  r.witness_value = x.dot(M * x);
  if (r.witness_value < -kWitnessTol) {
    r.status = Copositivity::NotCopositive;
    r.witness = std::move(x);
  }
  r.decided_by = step;
  return r;
}

// Exact minimum of q(s) = [s, 1-s] M [s, 1-s]^T over s in [0, 1].
VectorX best_on_edge(double m11, double m12, double m22) {
  const double a = m11 - 2.0 * m12 + m22;
  const double bb = 2.0 * (m12 - m22);
  std::vector<double> candidates = {0.0, 1.0};
  if (a > 0.0) candidates.push_back(std::clamp(-bb / (2.0 * a), 0.0, 1.0));
  double best_s = 0.0, best = INFINITY;
  for (double s : candidates) {
    const double q = a * s * s + bb * s + m22;
    if (q < best) {
      best = q;
      best_s = s;
    }
  }
  VectorX x(2);
  x << best_s, 1.0 - best_s;
  return x;
}

}  // namespace

CopositivityResult copositivity_check(const MatrixX& M, int budget, Rng& rng) {
  const Index k = M.rows();
  if (k < 1 || M.cols() != k) throw ContractViolation("copositivity_check: bad shape");

  if ((M.array() >= 0.0).all()) return {Copositivity::Copositive, {}, 0.0, "nonnegative"};
  if (smallest_eigenpair(M).value >= -1e-10) return {Copositivity::Copositive, {}, 0.0, "psd"};

  if (k == 1) return not_copositive(VectorX::Ones(1), M, "2x2");
  if (k == 2) {
    const double m11 = M(0, 0), m12 = M(0, 1), m22 = M(1, 1);
    const double tol = 1e-12 * (1.0 + M.norm());
    const bool copositive = m11 >= -tol && m22 >= -tol &&
                            m12 + std::sqrt(std::max(m11, 0.0) * std::max(m22, 0.0)) >= -tol;
    if (copositive) return {Copositivity::Copositive, {}, 0.0, "2x2"};
    return not_copositive(best_on_edge(m11, m12, m22), M, "2x2");
  }

  const double lipschitz = 2.0 * M.operatorNorm();
  const double step = 1.0 / lipschitz;
  auto descend = [&](VectorX x) {
    double value = x.dot(M * x);
    for (int it = 0; it < 500; ++it) {
      const VectorX next = project_to_simplex(x - step * 2.0 * (M * x));
      const double next_value = next.dot(M * next);
      const double moved = (next - x).lpNorm<Eigen::Infinity>();
      x = next;
      value = next_value;
      if (value < kSearchThreshold || moved < 1e-13) break;
    }
    return std::make_pair(value, x);
  };

  std::vector<VectorX> starts;
  for (Index i = 0; i < k; ++i) starts.push_back(VectorX::Unit(k, i));
  starts.push_back(VectorX::Constant(k, 1.0 / static_cast<double>(k)));
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const VectorX e = best_on_edge(M(i, i), M(i, j), M(j, j));
      VectorX x = VectorX::Zero(k);
      x(i) = e(0);
      x(j) = e(1);
      starts.push_back(x);
    }
  }
  std::exponential_distribution<double> expo(1.0);
  for (int s = 0; s < budget; ++s) {
    VectorX x(k);
    for (Index i = 0; i < k; ++i) x(i) = expo(rng);
    starts.push_back(x / x.sum());
  }

  for (const VectorX& start : starts) {
    auto [value, x] = descend(start);
    if (value < kSearchThreshold) return not_copositive(x, M, "search");
  }
  return {Copositivity::Unknown, {}, 0.0, "search"};
}

}  // namespace sphconv

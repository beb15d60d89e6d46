#include "sphconv/sampling.hpp"

namespace sphconv {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

VectorX normal_vector(Index n, Rng& rng) {
  std::normal_distribution<double> normal;
  VectorX x(n);
  for (Index i = 0; i < n; ++i) x(i) = normal(rng);
  return x;
}

}  // namespace

VectorX sample_unit(Index n, Rng& rng) {
  for (;;) {
    VectorX x = normal_vector(n, rng);
    const double norm = x.norm();
    if (norm > 1e-12) return x / norm;
  }
}

VectorX sample_unit_in_orthant_face(const std::vector<bool>& keep, Rng& rng) {
  const Index n = static_cast<Index>(keep.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    VectorX x = normal_vector(n, rng).cwiseAbs();
    for (Index i = 0; i < n; ++i)
      if (!keep[static_cast<std::size_t>(i)]) x(i) = 0.0;
    const double norm = x.norm();
    if (norm > 1e-12) return x / norm;
  }
  throw SamplingFailure("orthant face sampling produced zero vectors");
}

VectorX sample_unit_in_cone(const Cone& cone, Rng& rng) {
  std::uniform_real_distribution<double> unif;
  const bool masked = unif(rng) < kBoundaryDrawProbability;

  if (cone.kind() == Cone::Kind::NonnegOrthant) {
    const Index n = cone.dim();
    std::vector<bool> keep(static_cast<std::size_t>(n), true);
    if (masked) {
      std::bernoulli_distribution coin(0.5);
      std::uniform_int_distribution<Index> pick(0, n - 1);
      bool any = false;
      for (auto&& k : keep) {
        k = coin(rng);
        any = any || k;
      }
      if (!any) keep[static_cast<std::size_t>(pick(rng))] = true;
    }
    return sample_unit_in_orthant_face(keep, rng);
  }

  const MatrixX& G = cone.generators();
  const Index m = G.cols();
  std::uniform_int_distribution<Index> pick(0, m - 1);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 100; ++attempt) {
    VectorX w = normal_vector(m, rng).cwiseAbs();
    if (masked) {
      const Index kept = pick(rng);
      for (Index k = 0; k < m; ++k)
        if (k != kept && coin(rng)) w(k) = 0.0;
    }
    const VectorX x = G * w;
    const double norm = x.norm();
    if (norm > 1e-12) return x / norm;
  }
  throw SamplingFailure(
      "cone sampling produced a zero combination 100 times in a row");
}

VectorX sample_orthogonal_partner(const VectorX& v, Rng& rng) {
  for (;;) {
    VectorX u = normal_vector(v.size(), rng);
    u -= u.dot(v) * v;
    // Second pass removes the residual left by cancellation.
    u -= u.dot(v) * v;
    const double norm = u.norm();
    if (norm > 1e-8) return u / norm;
  }
}

}  // namespace sphconv

#include "sphconv/generators.hpp"

#include "sphconv/certificates.hpp"

#include <cmath>

namespace sphconv {

namespace {

void require_dim(Index n) {
  if (n < 3) throw InputError("generator: n must be at least 3");
}

MatrixX random_symmetric(Index n, Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  MatrixX A(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) A(i, j) = unif(rng);
  return 0.5 * (A + A.transpose());
}

}  // namespace

GeneratedInstance gen_gap(Index n, Rng& rng) {
  require_dim(n);
  const MatrixX A = random_symmetric(n, rng);
  const QuadraticInstance probe(A, VectorX::Zero(n));
  const double bound =
      2.0 * std::sqrt(static_cast<double>(n)) * (probe.lambda_min() - probe.lambda_max());
  std::normal_distribution<double> normal;
  VectorX b(n);
  for (Index i = 0; i < n; ++i) b(i) = bound - std::abs(normal(rng));
  return {QuadraticInstance(A, b), "gap", "thlt.vi.gap", "convex"};
}

GeneratedInstance gen_diag_iff(Index n, Rng& rng, bool convex) {
  require_dim(n);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  VectorX d(n);
  for (Index i = 0; i < n; ++i) d(i) = unif(rng);
  // Duplicate the minimum at a second index.
  Index low = 0;
  d.minCoeff(&low);
  std::uniform_int_distribution<Index> pick(0, n - 2);
  Index twin = pick(rng);
  if (twin >= low) ++twin;
  d(twin) = d(low);
  const double dmin = d(low);

  std::uniform_real_distribution<double> frac(0.0, 1.0);
  VectorX b(n);
  for (Index i = 0; i < n; ++i) {
    const double bound = 2.0 * (dmin - d(i));
    // A third of the coordinates sit exactly on the bound.
    b(i) = frac(rng) < 1.0 / 3.0 ? bound : bound - frac(rng);
  }
  if (!convex) {
    std::uniform_int_distribution<Index> which(0, n - 1);
    std::uniform_real_distribution<double> margin(0.05, 0.5);
    const Index i = which(rng);
    b(i) = 2.0 * (dmin - d(i)) + margin(rng);
  }
  return {QuadraticInstance(MatrixX(d.asDiagonal()), b), convex ? "diag-iff" : "diag-iff-nonconvex",
          "iffdiag", convex ? "convex" : "nonconvex"};
}

GeneratedInstance gen_bipos(Index n, Rng& rng) {
  require_dim(n);
  std::uniform_real_distribution<double> base(-2.0, 2.0);
  std::uniform_real_distribution<double> gap_dist(0.1, 3.0);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  const double low = base(rng);
  const double gap = gap_dist(rng);
  const Index tau1 = pick(rng);
  VectorX d = VectorX::Constant(n, low + gap);
  d(tau1) = low;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Strictly positive entry in (0, 2 gap].
  const double positive = 2.0 * gap * (1.0 - unit(rng));
  VectorX b = VectorX::Constant(n, -2.0 * gap * bipos_beta());
  b(tau1) = positive;
  return {QuadraticInstance(MatrixX(d.asDiagonal()), b), "bipos", "bipos", "convex"};
}

GeneratedInstance gen_cd(Index n, Rng& rng) {
  require_dim(n);
  const MatrixX A = random_symmetric(n, rng);
  const DecompositionBounds bounds = decomposition_bounds(A);
  std::normal_distribution<double> normal;
  VectorX b(n);
  for (Index i = 0; i < n; ++i) b(i) = bounds.bound_iii(i) - std::abs(normal(rng));
  return {QuadraticInstance(A, b), "cd", "cd.iii", "convex"};
}

GeneratedInstance gen_random(Index n, Rng& rng) {
  require_dim(n);
  const MatrixX A = random_symmetric(n, rng);
  std::normal_distribution<double> normal;
  VectorX b(n);
  for (Index i = 0; i < n; ++i) b(i) = 2.0 * normal(rng);
  return {QuadraticInstance(A, b, normal(rng)), "random", "", "unknown"};
}

GeneratedInstance generate(std::string_view family, Index n, Rng& rng) {
  if (family == "gap") return gen_gap(n, rng);
  if (family == "diag-iff") return gen_diag_iff(n, rng, true);
  if (family == "diag-iff-nonconvex") return gen_diag_iff(n, rng, false);
  if (family == "bipos") return gen_bipos(n, rng);
  if (family == "cd") return gen_cd(n, rng);
  if (family == "random") return gen_random(n, rng);
  throw InputError("unknown family: " + std::string(family));
}

}  // namespace sphconv

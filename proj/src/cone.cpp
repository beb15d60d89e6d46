#include "sphconv/cone.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <string>

namespace sphconv {

VectorX nnls(const MatrixX& G, const VectorX& x) {
  const Index m = G.cols();
  VectorX z = VectorX::Zero(m);
  std::vector<bool> passive(m, false);
  const double tol = 1e-12 * (1.0 + G.norm()) * (1.0 + x.norm());

  VectorX w = G.transpose() * x;
  for (Index outer = 0; outer < 3 * m + 10; ++outer) {
    Index t = -1;
    double best = tol;
    for (Index j = 0; j < m; ++j) {
      if (!passive[j] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[t] = true;

    for (Index inner = 0; inner < 3 * m + 10; ++inner) {
      std::vector<Index> cols;
      for (Index j = 0; j < m; ++j)
        if (passive[j]) cols.push_back(j);
      MatrixX Gp(G.rows(), static_cast<Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k)
        Gp.col(static_cast<Index>(k)) = G.col(cols[k]);
      const VectorX sp = Gp.colPivHouseholderQr().solve(x);

      VectorX s = VectorX::Zero(m);
      bool feasible = true;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        s(cols[k]) = sp(static_cast<Index>(k));
        if (s(cols[k]) <= 0.0) feasible = false;
      }
      if (feasible) {
        z = s;
        break;
      }
      double alpha = 1.0;
      for (Index j : cols) {
        if (s(j) <= 0.0) alpha = std::min(alpha, z(j) / (z(j) - s(j)));
      }
      z += alpha * (s - z);
      for (Index j : cols) {
        if (z(j) <= 1e-15) {
          z(j) = 0.0;
          passive[j] = false;
        }
      }
    }
    w = G.transpose() * (x - G * z);
  }
  return z;
}

namespace {

bool in_conic_hull(const MatrixX& G, const VectorX& x, double tol) {
  const VectorX z = nnls(G, x);
  return (G * z - x).norm() <= tol * (1.0 + x.norm());
}

}  // namespace

Cone::Cone(Kind kind, Index dim, MatrixX generators)
    : kind_(kind), dim_(dim), generators_(std::move(generators)) {
  if (kind_ == Kind::NonnegOrthant) {
    contains_orthant_ = true;
    within_orthant_ = true;
    return;
  }
  within_orthant_ = (generators_.array() >= -kConeTol).all();
  contains_orthant_ = true;
  for (Index i = 0; i < dim_; ++i) {
    if (!contains(VectorX::Unit(dim_, i))) {
      contains_orthant_ = false;
      break;
    }
  }
}

Cone Cone::orthant(Index n) {
  if (n < 1) throw InputError("cone dimension must be positive");
  return Cone(Kind::NonnegOrthant, n, MatrixX());
}

Cone Cone::generated(const std::vector<VectorX>& generators) {
  if (generators.empty()) throw InputError("cone.generators is empty");
  const Index n = generators.front().size();
  MatrixX G(n, static_cast<Index>(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const VectorX& g = generators[k];
    if (g.size() != n) {
      throw InputError("cone.generators[" + std::to_string(k) +
                       "] has length " + std::to_string(g.size()) +
                       ", expected " + std::to_string(n));
    }
    if (!g.allFinite() || g.norm() <= 1e-14) {
      throw InputError("cone.generators[" + std::to_string(k) +
                       "] is zero or non-finite");
    }
    G.col(static_cast<Index>(k)) = g;
  }
  // Pointed iff no generator's negation is a nonnegative combination.
  for (Index k = 0; k < G.cols(); ++k) {
    if (in_conic_hull(G, -G.col(k), 1e-9)) {
      throw InputError("cone.generators span a cone that is not pointed (-g" +
                       std::to_string(k) + " lies in the cone)");
    }
  }
  return Cone(Kind::Generated, n, std::move(G));
}

bool Cone::contains(const VectorX& x, double tol) const {
  if (x.size() != dim_) return false;
  if (kind_ == Kind::NonnegOrthant) return (x.array() >= -tol).all();
  return in_conic_hull(generators_, x, std::max(tol, 1e-9));
}

bool Cone::dual_contains(const VectorX& y, double tol) const {
  if (kind_ == Kind::NonnegOrthant) return (y.array() >= -tol).all();
  for (Index k = 0; k < generators_.cols(); ++k)
    if (y.dot(generators_.col(k)) < -tol * generators_.col(k).norm())
      return false;
  return true;
}

bool Cone::polar_contains(const VectorX& y, double tol) const {
  return dual_contains(-y, tol);
}

bool Cone::contains_orthant() const { return contains_orthant_; }
bool Cone::within_orthant() const { return within_orthant_; }

}  // namespace sphconv

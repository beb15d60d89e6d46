#include "sphconv/certificates.hpp"

#include "sphconv/linalg.hpp"
#include "sphconv/slack.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace sphconv {

double bipos_beta() { return std::sqrt(6.0 * std::sqrt(3.0) - 9.0); }

namespace {

struct Candidate {
  VectorX u;
  VectorX v;
};

CertificateOutcome make_outcome(std::string name) {
  CertificateOutcome out;
  out.name = std::move(name);
  return out;
}

CertificateOutcome not_applicable(std::string name, std::string note) {
  CertificateOutcome out = make_outcome(std::move(name));
  out.verdict = CertVerdict::NotApplicable;
  out.note = std::move(note);
  return out;
}

double tolerance(const QuadraticInstance& inst, const CertOptions& opts) {
  return opts.rel_tol * inst.scale();
}

VectorX unit(Index n, Index i) { return VectorX::Unit(n, i); }

VectorX rotated_u(Index n, Index i, Index j) {
  VectorX u = VectorX::Zero(n);
  u(i) = std::numbers::sqrt2 / 2.0;
  u(j) = -std::numbers::sqrt2 / 2.0;
  return u;
}

VectorX rotated_v(Index n, Index i, Index j) {
  VectorX v = VectorX::Zero(n);
  v(i) = std::numbers::sqrt2 / 2.0;
  v(j) = std::numbers::sqrt2 / 2.0;
  return v;
}

// Some index different from every entry of `avoid`.
Index other_index(Index n, std::initializer_list<Index> avoid) {
  for (Index k = 0; k < n; ++k)
    if (std::find(avoid.begin(), avoid.end(), k) == avoid.end()) return k;
  return 0;
}

// Evaluates every candidate and keeps the most negative. A violated bound
// whose witnesses are not strictly negative is reported as Inconclusive.
void conclude_nonconvex(CertificateOutcome& out, const QuadraticInstance& inst,
                        const Cone& cone, const std::vector<Candidate>& candidates,
                        std::string violation) {
  std::optional<WitnessPair> best;
  for (const Candidate& c : candidates) {
    WitnessPair w = make_witness(inst, cone, c.u, c.v);
    if (!best || w.slack < best->slack) best = std::move(w);
  }
  out.note = std::move(violation);
  if (best && best->slack < -kWitnessTol) {
    out.verdict = CertVerdict::ProvesNonConvex;
    out.witness = std::move(best);
  } else {
    out.verdict = CertVerdict::Inconclusive;
    out.note += "; no witness with negative slack, downgraded";
  }
}

std::vector<Index> diagonal_argmin(const MatrixX& A) {
  const double dmin = A.diagonal().minCoeff();
  std::vector<Index> argmin;
  for (Index i = 0; i < A.rows(); ++i)
    if (A(i, i) <= dmin + kTieTol) argmin.push_back(i);
  return argmin;
}

bool contains(const std::vector<Index>& set, Index i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

}  // namespace

// --- exact -----------------------------------------------------------------

CertificateOutcome cert_affine(const QuadraticInstance& inst, const Cone& cone,
                               const CertOptions& opts) {
  const std::string name = "thlt.i.affine";
  if (!is_zero_matrix(inst.A())) return not_applicable(name, "A is not zero");
  const Index n = inst.dim();
  const VectorX& b = inst.b();
  const double tol = tolerance(inst, opts);
  CertificateOutcome out = make_outcome(name);

  // f is convex iff b lies in the polar cone: <b, g> <= 0 on every extreme ray.
  std::vector<VectorX> rays;
  if (cone.kind() == Cone::Kind::NonnegOrthant) {
    for (Index i = 0; i < n; ++i) rays.push_back(unit(n, i));
  } else {
    for (Index k = 0; k < cone.generators().cols(); ++k)
      rays.push_back(cone.generators().col(k).normalized());
  }
  double worst = -INFINITY;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const double value = b.dot(rays[k]);
    if (value > worst) {
      worst = value;
      worst_k = k;
    }
  }
  out.values.emplace_back("max_b_dot_ray", worst);
  if (worst <= tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b lies in the polar cone";
    return out;
  }
  const VectorX& v = rays[worst_k];
  const VectorX u = complement_basis(v).col(0);
  conclude_nonconvex(out, inst, cone, {{u, v}}, "b has positive inner product with a ray of the cone");
  return out;
}

CertificateOutcome cert_diag_iff(const QuadraticInstance& inst, const Cone& cone,
                                 const CertOptions& opts) {
  const std::string name = "iffdiag";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  if (!is_diagonal(A)) return not_applicable(name, "A is not diagonal");
  const std::vector<Index> argmin = diagonal_argmin(A);
  if (argmin.size() < 2) {
    return not_applicable(name, "minimal diagonal entry is attained only once");
  }
  const Index n = inst.dim();
  const double dmin = A.diagonal().minCoeff();
  const double tol = tolerance(inst, opts);
  CertificateOutcome out = make_outcome(name);

  std::vector<Candidate> candidates;
  double worst = -INFINITY;
  for (Index i = 0; i < n; ++i) {
    const double excess = inst.b()(i) - 2.0 * (dmin - A(i, i));
    worst = std::max(worst, excess);
    if (excess > tol) {
      const Index i0 = argmin[0] != i ? argmin[0] : argmin[1];
      candidates.push_back({unit(n, i0), unit(n, i)});
    }
  }
  out.values.emplace_back("max_excess_over_bound", worst);
  if (candidates.empty()) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b_i <= 2[min d - d_i] for all i";
    return out;
  }
  conclude_nonconvex(out, inst, cone, candidates, "b_i exceeds 2[min d - d_i]");
  return out;
}

CertificateOutcome cert_rank_one_basis(const QuadraticInstance& inst, const Cone& cone,
                                       const CertOptions& opts) {
  const std::string name = "lemd.rank1";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  const Index n = inst.dim();
  Index pivot = -1;
  double sign = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      MatrixX E = MatrixX::Zero(n, n);
      E(i, i) = s;
      if ((A - E).cwiseAbs().maxCoeff() <= kPatternTol) {
        pivot = i;
        sign = s;
      }
    }
  }
  if (pivot < 0) return not_applicable(name, "A is not +-e^i (e^i)^T");

  const VectorX& b = inst.b();
  const double tol = tolerance(inst, opts);
  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("sign", sign);
  out.values.emplace_back("index", static_cast<double>(pivot));
  std::vector<Candidate> candidates;

  if (sign > 0.0) {
    // Exact: b_i <= -2 and b_j <= 0 for j != i.
    for (Index j = 0; j < n; ++j) {
      const double bound = j == pivot ? -2.0 : 0.0;
      if (b(j) - bound > tol) {
        const Index k = other_index(n, {j, pivot});
        candidates.push_back({unit(n, k), unit(n, j)});
      }
    }
    if (candidates.empty()) {
      out.verdict = CertVerdict::ProvesConvex;
      out.note = "b_i <= -2 and b_j <= 0";
      return out;
    }
    conclude_nonconvex(out, inst, cone, candidates, "b violates b_j <= -2 delta_ij");
    return out;
  }

  // -e^i(e^i)^T: necessary b_k <= -2 (k != i) and b_i <= 2.
  for (Index k = 0; k < n; ++k) {
    if (k != pivot && b(k) + 2.0 > tol) candidates.push_back({unit(n, pivot), unit(n, k)});
  }
  if (b(pivot) - 2.0 > tol) {
    candidates.push_back({unit(n, other_index(n, {pivot})), unit(n, pivot)});
  }
  if (!candidates.empty()) {
    conclude_nonconvex(out, inst, cone, candidates,
                       "negative pattern needs b_k <= -2 off the pivot and b_i <= 2");
    return out;
  }
  double tail_max = -INFINITY;
  for (Index k = 0; k < n; ++k)
    if (k != pivot) tail_max = std::max(tail_max, b(k));
  if (b(pivot) <= tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "negative pattern with b_i <= 0 and b_k <= -2";
  } else if (tail_max <= -2.0 * bipos_beta() + tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "negative pattern: shifted positive-component bound with gap 1";
  } else {
    out.verdict = CertVerdict::Inconclusive;
    out.note = "negative pattern with 0 < b_i <= 2 and tail above -2 beta";
  }
  return out;
}

// --- sufficient --------------------------------------------------------------

CertificateOutcome cert_gap_sufficient(const QuadraticInstance& inst, const Cone& cone,
                                       const CertOptions& opts) {
  const std::string name = "thlt.vi.gap";
  if (!cone.within_orthant()) return not_applicable(name, "cone is not inside the orthant");
  const double n = static_cast<double>(inst.dim());
  const double bound = 2.0 * std::sqrt(n) * (inst.lambda_min() - inst.lambda_max());
  const double bmax = inst.b().maxCoeff();
  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("bound", bound);
  out.values.emplace_back("max_b", bmax);
  if (bmax <= bound + tolerance(inst, opts)) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b_i <= 2 sqrt(n) [lambda_min - lambda_max]";
  } else {
    out.note = "spectral gap bound not met";
  }
  return out;
}

SuffdConditions suffd_conditions(const QuadraticInstance& inst, const CertOptions& opts) {
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);
  const double lmin = inst.lambda_min();

  SuffdConditions s;
  s.b_nonpositive = b.maxCoeff() <= tol;
  s.cond_iii = true;
  for (Index i = 0; i < n; ++i)
    if (b(i) > 2.0 * (lmin - A(i, i)) + tol) s.cond_iii = false;

  // Entries within rounding of zero are snapped so the nonnegativity rung of
  // the ladder sees exact zeros.
  auto snap = [](MatrixX M) {
    const double eps = 1e-13 * (1.0 + M.norm());
    for (Index j = 0; j < M.cols(); ++j)
      for (Index i = 0; i < M.rows(); ++i)
        if (std::abs(M(i, j)) <= eps) M(i, j) = 0.0;
    return M;
  };

  Rng rng(opts.copositivity_seed);
  MatrixX B = -A;
  B.diagonal().setZero();
  s.diag_gap_copositivity = copositivity_check(snap(B), opts.copositivity_budget, rng).status;
  s.cond_i = s.diag_gap_copositivity == Copositivity::Copositive && s.cond_iii;

  MatrixX C = -2.0 * A;
  C.diagonal().array() += 2.0 * lmin;
  C.diagonal() -= b;
  s.shifted_copositivity = copositivity_check(snap(C), opts.copositivity_budget, rng).status;
  s.cond_ii = s.shifted_copositivity == Copositivity::Copositive && s.b_nonpositive;
  return s;
}

CertificateOutcome cert_copositive_chain(const QuadraticInstance& inst, const Cone& cone,
                                         const CertOptions& opts) {
  const std::string name = "suffd.ii";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  CertificateOutcome out = make_outcome(name);
  const SuffdConditions s = suffd_conditions(inst, opts);
  out.values.emplace_back("cond_i", s.cond_i ? 1.0 : 0.0);
  out.values.emplace_back("cond_ii", s.cond_ii ? 1.0 : 0.0);
  out.values.emplace_back("cond_iii", s.cond_iii ? 1.0 : 0.0);
  if (!s.b_nonpositive) {
    out.note = "hypothesis b <= 0 fails";
    return out;
  }
  switch (s.shifted_copositivity) {
    case Copositivity::Copositive:
      out.verdict = CertVerdict::ProvesConvex;
      out.note = "2[lambda_min I - A] - diag(b) is copositive and b <= 0";
      break;
    case Copositivity::Unknown:
      out.note = "copositivity of 2[lambda_min I - A] - diag(b) undecided";
      break;
    case Copositivity::NotCopositive:
      out.note = "2[lambda_min I - A] - diag(b) is not copositive";
      break;
  }
  return out;
}

CertificateOutcome cert_zmatrix(const QuadraticInstance& inst, const Cone& cone,
                                const CertOptions& opts) {
  const std::string name = "cor.zmatrix";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  if (!is_z_matrix(A)) return not_applicable(name, "A is not a Z-matrix");
  const double tol = tolerance(inst, opts);
  const VectorX bound = 2.0 * (inst.lambda_min() - A.diagonal().array()).matrix();
  const double excess = (inst.b() - bound).maxCoeff();
  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("max_excess_over_bound", excess);
  if (excess <= tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "Z-matrix with b_i <= 2[lambda_min - a_ii]";
  } else {
    out.note = "b_i exceeds 2[lambda_min - a_ii]";
  }
  return out;
}

CertificateOutcome cert_bipos(const QuadraticInstance& inst, const Cone& cone,
                              const CertOptions& opts) {
  const std::string name = "bipos";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  if (!is_diagonal(A)) return not_applicable(name, "A is not diagonal");
  const Index n = inst.dim();
  const VectorX d = A.diagonal();
  Index low = 0;
  d.minCoeff(&low);
  double tail_min = INFINITY, tail_max = -INFINITY;
  for (Index i = 0; i < n; ++i) {
    if (i == low) continue;
    tail_min = std::min(tail_min, d(i));
    tail_max = std::max(tail_max, d(i));
  }
  const double gap = tail_min - d(low);
  if (gap <= kTieTol) return not_applicable(name, "minimal diagonal entry is not unique");
  if (tail_max - tail_min > kTieTol) {
    return not_applicable(name, "diagonal tail is not constant");
  }

  const double beta = bipos_beta();
  const double tol = tolerance(inst, opts);
  const VectorX& b = inst.b();
  bool holds = b(low) <= 2.0 * gap + tol;
  for (Index i = 0; i < n; ++i)
    if (i != low && b(i) > -2.0 * gap * beta + tol) holds = false;

  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("gap", gap);
  out.values.emplace_back("beta", beta);
  out.values.emplace_back("min_index", static_cast<double>(low));
  if (holds) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b_min <= 2 gap and tail b_i <= -2 gap beta";
  } else {
    out.note = "positive-component bounds not met";
  }
  return out;
}

CertificateOutcome cert_offdiag_pair(const QuadraticInstance& inst, const Cone& cone,
                                     const CertOptions& opts) {
  const std::string name = "lemndp.pair";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  const Index n = inst.dim();
  Index pi = -1, pj = -1;
  double sign = 0.0;
  for (Index i = 0; i < n && pi < 0; ++i) {
    for (Index j = i + 1; j < n && pi < 0; ++j) {
      for (double s : {1.0, -1.0}) {
        MatrixX E = MatrixX::Zero(n, n);
        E(i, j) = E(j, i) = s;
        if ((A - E).cwiseAbs().maxCoeff() <= kPatternTol) {
          pi = i;
          pj = j;
          sign = s;
        }
      }
    }
  }
  if (pi < 0) return not_applicable(name, "A is not +-(e^i e^j^T + e^j e^i^T)");

  const VectorX& b = inst.b();
  const double tol = tolerance(inst, opts);
  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("sign", sign);

  std::vector<Candidate> candidates;
  for (Index k = 0; k < n; ++k) {
    const bool on_pair = k == pi || k == pj;
    const double bound = on_pair ? 0.0 : -2.0;
    if (b(k) - bound <= tol) continue;
    if (on_pair) {
      const Index l = k == pi ? pj : pi;
      candidates.push_back({unit(n, l), unit(n, k)});
    } else {
      VectorX u = VectorX::Zero(n);
      u(pi) = std::numbers::sqrt2 / 2.0;
      u(pj) = -sign * std::numbers::sqrt2 / 2.0;
      candidates.push_back({u, unit(n, k)});
    }
  }
  if (!candidates.empty()) {
    conclude_nonconvex(out, inst, cone, candidates,
                       "b_k exceeds 2(delta_ik + delta_jk - 1)");
    return out;
  }
  const double bound = -3.0 - sign;
  if (b.maxCoeff() <= bound + tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b_k <= -3 -+ 1 for all k";
  } else {
    out.note = "necessary bounds hold, sufficient bound not met";
  }
  return out;
}

DecompositionBounds decomposition_bounds(const MatrixX& A) {
  const Index n = A.rows();
  double sum_abs = 0.0, sum_plus = 0.0, sum_minus = 0.0, neg_diag = 0.0;
  for (Index i = 0; i < n; ++i) {
    neg_diag += std::max(-A(i, i), 0.0);
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      sum_abs += std::abs(A(i, j));
      sum_plus += std::max(A(i, j), 0.0);
      sum_minus += std::max(-A(i, j), 0.0);
    }
  }
  DecompositionBounds out{VectorX(n), VectorX(n)};
  for (Index k = 0; k < n; ++k) {
    // A negative diagonal block -e^i e^i^T needs b <= -2 off its own index.
    const double diag_part =
        -2.0 * std::max(A(k, k), 0.0) - 2.0 * (neg_diag - std::max(-A(k, k), 0.0));
    out.bound_iii(k) = diag_part - 4.0 * sum_abs;
    out.bound_ii(k) = diag_part - 4.0 * sum_plus - 2.0 * sum_minus;
  }
  return out;
}

CertificateOutcome cert_decomposition(const QuadraticInstance& inst, const Cone& cone,
                                      const CertOptions& opts) {
  const std::string name = "cd.iii";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  if (is_zero_matrix(inst.A())) return not_applicable(name, "A is zero");
  const DecompositionBounds bounds = decomposition_bounds(inst.A());
  const double tol = tolerance(inst, opts);
  const double excess_iii = (inst.b() - bounds.bound_iii).maxCoeff();
  const double excess_ii = (inst.b() - bounds.bound_ii).maxCoeff();
  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("max_excess_over_bound_iii", excess_iii);
  out.values.emplace_back("max_excess_over_bound_ii", excess_ii);
  out.values.emplace_back("bound_iii_min", bounds.bound_iii.minCoeff());
  out.values.emplace_back("bound_ii_min", bounds.bound_ii.minCoeff());
  if (excess_iii <= tol) {
    out.verdict = CertVerdict::ProvesConvex;
    out.note = "b within the decomposition bound (ordered off-diagonal pairs)";
  } else {
    out.note = excess_ii <= tol ? "only the sharper (ii) bound holds"
                                : "decomposition bound not met";
  }
  return out;
}

// --- necessary ---------------------------------------------------------------

CertificateOutcome cert_offdiag_mix(const QuadraticInstance& inst, const Cone& cone,
                                    const CertOptions& opts) {
  const std::string name = "thlt.ii.mix";
  if (!cone.is_orthant()) {
    return not_applicable(name, "self-duality K* in K is only established for the orthant");
  }
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);
  const double c = std::numbers::sqrt2 / 8.0;

  CertificateOutcome out = make_outcome(name);
  std::vector<Candidate> candidates;
  double worst = -INFINITY;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double excess = A(i, j) + c * (b(i) + b(j));
      worst = std::max(worst, excess);
      if (excess > tol) candidates.push_back({rotated_u(n, i, j), rotated_v(n, i, j)});
    }
  }
  out.values.emplace_back("max_excess", worst);
  if (candidates.empty()) return out;
  conclude_nonconvex(out, inst, cone, candidates, "a_ij > -(sqrt2/8)(b_i + b_j)");
  return out;
}

CertificateOutcome cert_pair_sums(const QuadraticInstance& inst, const Cone& cone,
                                  const CertOptions& opts) {
  const std::string name = "thlt.iii.pairsum";
  if (!cone.contains_orthant()) return not_applicable(name, "cone does not contain the orthant");
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);

  CertificateOutcome out = make_outcome(name);
  std::vector<Candidate> candidates;
  bool sum_violated = false, ij_violated = false;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i < j && b(i) + b(j) > tol) {
        sum_violated = true;
        candidates.push_back({unit(n, i), unit(n, j)});
        candidates.push_back({unit(n, j), unit(n, i)});
      }
      if (b(j) - 2.0 * (A(i, i) - A(j, j)) > tol) {
        ij_violated = true;
        candidates.push_back({unit(n, i), unit(n, j)});
      }
    }
  }
  if (candidates.empty()) return out;
  std::string what = sum_violated ? "b_i + b_j > 0" : "";
  if (ij_violated) what += std::string(what.empty() ? "" : "; ") + "2(a_ii - a_jj) < b_j";
  conclude_nonconvex(out, inst, cone, candidates, what);
  return out;
}

CertificateOutcome cert_pair_vs_offdiag(const QuadraticInstance& inst, const Cone& cone,
                                        const CertOptions& opts) {
  const std::string name = "thlt.iv.sup";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);
  const double c = 4.0 * std::numbers::sqrt2;

  CertificateOutcome out = make_outcome(name);
  std::vector<Candidate> candidates;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (b(i) + b(j) + c * std::max(A(i, j), 0.0) <= tol) continue;
      candidates.push_back({unit(n, i), unit(n, j)});
      candidates.push_back({unit(n, j), unit(n, i)});
      candidates.push_back({rotated_u(n, i, j), rotated_v(n, i, j)});
    }
  }
  if (candidates.empty()) return out;
  conclude_nonconvex(out, inst, cone, candidates, "b_i + b_j > -4 sqrt2 a_ij^+");
  return out;
}

CertificateOutcome cert_bminus_positive(const QuadraticInstance& inst, const Cone& cone,
                                        const CertOptions& opts) {
  const std::string name = "thlt.v.bminus";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  if (!perron_check(inst.A())) return not_applicable(name, "A is not entrywise positive");
  const Index n = inst.dim();
  Eigen::SelfAdjointEigenSolver<MatrixX> es(inst.A());
  const double lmin = es.eigenvalues()(0);
  const double lmax = es.eigenvalues()(n - 1);
  const double bound = 2.0 * (lmax - lmin);
  const double bminus = inst.b().cwiseMin(0.0).norm();
  const double tol = tolerance(inst, opts);

  CertificateOutcome out = make_outcome(name);
  out.values.emplace_back("norm_b_minus", bminus);
  out.values.emplace_back("bound", bound);
  if (bound <= tol) {
    out.note = "lambda_max = lambda_min, bound is vacuous";
    return out;
  }
  if (bminus >= bound - tol) return out;
  VectorX v = es.eigenvectors().col(n - 1);
  if (v.sum() < 0.0) v = -v;
  v = v.cwiseMax(0.0).normalized();
  VectorX u = es.eigenvectors().col(0);
  conclude_nonconvex(out, inst, cone, {{u, v}}, "|b_-| < 2[lambda_max - lambda_min]");
  return out;
}

CertificateOutcome cert_prop_b(const QuadraticInstance& inst, const Cone& cone,
                               const CertOptions& opts) {
  const std::string name = "propb";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  if (is_zero_matrix(inst.A())) return not_applicable(name, "A is zero (affine case)");
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);
  const std::vector<Index> argmin = diagonal_argmin(A);

  CertificateOutcome out = make_outcome(name);
  std::vector<Candidate> candidates;
  for (Index m : argmin) {
    for (Index i = 0; i < n; ++i) {
      if (i == m) continue;
      if (!contains(argmin, i) && b(i) > tol) candidates.push_back({unit(n, m), unit(n, i)});
      if (b(m) + b(i) + 4.0 * std::max(A(m, i), 0.0) > tol) {
        candidates.push_back({unit(n, m), unit(n, i)});
        candidates.push_back({unit(n, i), unit(n, m)});
        candidates.push_back({rotated_u(n, m, i), rotated_v(n, m, i)});
      }
    }
  }
  out.values.emplace_back("argmin_size", static_cast<double>(argmin.size()));
  if (candidates.empty()) return out;
  conclude_nonconvex(out, inst, cone, candidates,
                     "b_i > 0 off a minimal diagonal index or b_m > -max(b_i + 4a_mi^+)");
  return out;
}

CertificateOutcome cert_deleted_submatrix(const QuadraticInstance& inst, const Cone& cone,
                                          const CertOptions& opts) {
  const std::string name = "prop.deleted";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const MatrixX& A = inst.A();
  const VectorX& b = inst.b();
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);
  const std::vector<Index> argmin = diagonal_argmin(A);

  std::vector<EigenPair> deleted;
  for (Index m : argmin) {
    EigenPair p = smallest_eigenpair(deleted_submatrix(A, m));
    if (p.value > A(m, m) + tol) {
      return not_applicable(name, "lambda_min(A_-m) > a_mm for a minimal index m");
    }
    deleted.push_back(std::move(p));
  }

  CertificateOutcome out = make_outcome(name);
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < argmin.size(); ++k) {
    const Index m = argmin[k];
    if (b(m) > tol) {
      VectorX u = VectorX::Zero(n);
      for (Index i = 0, s = 0; i < n; ++i)
        if (i != m) u(i) = deleted[k].vector(s++);
      candidates.push_back({u, unit(n, m)});
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (!contains(argmin, i) && b(i) > tol) candidates.push_back({unit(n, argmin[0]), unit(n, i)});
  }
  if (candidates.empty()) return out;
  conclude_nonconvex(out, inst, cone, candidates,
                     "b has a positive entry while lambda_min(A_-m) <= a_mm");
  return out;
}

ThetaMinimum theta_scan_pair(const QuadraticInstance& inst, Index i, Index j) {
  constexpr int kGrid = 1024;
  const double hi = std::numbers::pi / 2.0;
  const double h = hi / (kGrid - 1);
  auto g = [&](double t) { return rotated_pair_slack(inst, i, j, t); };

  int best = 0;
  double best_val = g(0.0);
  for (int k = 1; k < kGrid; ++k) {
    const double val = g(k * h);
    if (val < best_val) {
      best_val = val;
      best = k;
    }
  }
  double a = std::max(0, best - 1) * h;
  double c = std::min(kGrid - 1, best + 1) * h;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = c - phi * (c - a), x2 = a + phi * (c - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 80 && c - a > 1e-15; ++it) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - phi * (c - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (c - a);
      f2 = g(x2);
    }
  }
  ThetaMinimum out{best * h, best_val};
  const double mid = 0.5 * (a + c);
  if (g(mid) < out.slack) out = {mid, g(mid)};
  return out;
}

CertificateOutcome cert_theta_scan(const QuadraticInstance& inst, const Cone& cone,
                                   const CertOptions& opts) {
  const std::string name = "theta";
  if (!cone.is_orthant()) return not_applicable(name, "cone is not the orthant");
  const Index n = inst.dim();
  const double tol = tolerance(inst, opts);

  CertificateOutcome out = make_outcome(name);
  ThetaMinimum best{0.0, INFINITY};
  Index bi = 0, bj = 1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const ThetaMinimum m = theta_scan_pair(inst, i, j);
      if (m.slack < best.slack) {
        best = m;
        bi = i;
        bj = j;
      }
    }
  }
  // g(theta) is twice the first-order slack at the rotated pair.
  out.values.emplace_back("min_g", 2.0 * best.slack);
  out.values.emplace_back("theta", best.theta);
  if (best.slack >= -tol) return out;
  const RotatedPair p = rotated_pair(n, bi, bj, best.theta);
  conclude_nonconvex(out, inst, cone, {{p.u, p.v}}, "rotated-pair scan found a negative slack");
  return out;
}

}  // namespace sphconv

#include "oracles.hpp"

#include "sphconv/battery.hpp"
#include "sphconv/generators.hpp"
#include "sphconv/oracle.hpp"

#include <gtest/gtest.h>

using namespace sphconv;

namespace {

CertVerdict run_target(const GeneratedInstance& g) {
  const CertificateEntry* e = find_certificate(g.target_certificate);
  EXPECT_NE(e, nullptr) << g.target_certificate;
  if (!e) return CertVerdict::NotApplicable;
  return e->run(g.instance, Cone::orthant(g.instance.dim()), {}).verdict;
}

OracleVerdict quick_oracle(const GeneratedInstance& g, std::uint64_t seed, long long budget) {
  OracleConfig c;
  c.seed = seed;
  c.pair_budget = budget;
  return falsify(g.instance, Cone::orthant(g.instance.dim()), c);
}

}  // namespace

TEST(Generators, ConvexFamiliesFireTheirCertificate) {
  for (const char* family : {"gap", "diag-iff", "bipos", "cd"}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(child_seed(1000 + seed, 0));
      const GeneratedInstance g = generate(family, 3 + static_cast<Index>(seed % 5), rng);
      EXPECT_EQ(g.label, "convex");
      EXPECT_EQ(g.family, family);
      EXPECT_EQ(run_target(g), CertVerdict::ProvesConvex) << family << " seed " << seed;
      if (seed < 5) {
        const OracleVerdict v = quick_oracle(g, seed, 5000);
        EXPECT_NE(v.status, OracleStatus::FalsifiedNonConvex) << family << " seed " << seed;
        EXPECT_GE(v.min_slack, -1e-8);
      }
    }
  }
}

TEST(Generators, NonconvexDiagonalFalsifiedByStructuredPairs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(child_seed(2000 + seed, 0));
    const GeneratedInstance g = generate("diag-iff-nonconvex", 3 + static_cast<Index>(seed % 5), rng);
    EXPECT_EQ(g.label, "nonconvex");
    EXPECT_EQ(run_target(g), CertVerdict::ProvesNonConvex);
    const OracleVerdict v = quick_oracle(g, seed, 0);
    ASSERT_EQ(v.status, OracleStatus::FalsifiedNonConvex);
    EXPECT_EQ(v.found_by, "structured");
    EXPECT_LE(v.witness->slack, -0.02);
  }
}

TEST(Generators, DiagonalHasDuplicatedMinimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    for (bool convex : {true, false}) {
      const GeneratedInstance g = gen_diag_iff(5, rng, convex);
      const VectorX d = g.instance.A().diagonal();
      EXPECT_TRUE(is_diagonal(g.instance.A()));
      const double m = d.minCoeff();
      EXPECT_GE((d.array() == m).count(), 2);
      const VectorX bound = 2.0 * (VectorX::Constant(5, m) - d);
      const VectorX excess = g.instance.b() - bound;
      const Index over = (excess.array() > 0.0).count();
      if (convex) {
        EXPECT_EQ(over, 0);
      } else {
        EXPECT_EQ(over, 1);
        EXPECT_GE(excess.maxCoeff(), 0.05);
        EXPECT_LE(excess.maxCoeff(), 0.5);
      }
    }
  }
}

TEST(Generators, BiposHasOnePositiveEntry) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const GeneratedInstance g = gen_bipos(3 + static_cast<Index>(seed % 5), rng);
    EXPECT_EQ((g.instance.b().array() > 0.0).count(), 1);
  }
}

TEST(Generators, RandomIsSymmetricAndDeterministic) {
  Rng a(5), b(5);
  const GeneratedInstance x = generate("random", 4, a);
  const GeneratedInstance y = generate("random", 4, b);
  EXPECT_EQ(x.label, "unknown");
  EXPECT_EQ(x.instance.A(), y.instance.A());
  EXPECT_EQ(x.instance.b(), y.instance.b());
  EXPECT_EQ(x.instance.A(), x.instance.A().transpose());
}

TEST(Generators, Errors) {
  Rng rng(1);
  EXPECT_THROW(generate("nope", 4, rng), InputError);
  EXPECT_THROW(generate("gap", 2, rng), InputError);
}

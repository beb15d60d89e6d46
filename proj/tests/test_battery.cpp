#include "oracles.hpp"

#include "sphconv/battery.hpp"

#include <gtest/gtest.h>

using namespace sphconv;

namespace {

MatrixX diag3(double a, double b, double c) { return Eigen::Vector3d(a, b, c).asDiagonal(); }
VectorX vec3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

bool flips(BatteryVerdict a, BatteryVerdict b) {
  return (a == BatteryVerdict::ProvesConvex && b == BatteryVerdict::ProvesNonConvex) ||
         (a == BatteryVerdict::ProvesNonConvex && b == BatteryVerdict::ProvesConvex);
}

}  // namespace

TEST(Registry, OrderAndLookup) {
  const auto& reg = certificate_registry();
  ASSERT_EQ(reg.size(), 16u);
  EXPECT_EQ(reg.front().name, "thlt.i.affine");
  EXPECT_EQ(reg.back().name, "theta");
  // Exact, then sufficient, then necessary.
  int rank = 0;
  for (const auto& e : reg) {
    const int r = e.kind == CertKind::Exact ? 0 : e.kind == CertKind::Sufficient ? 1 : 2;
    EXPECT_GE(r, rank) << e.name;
    rank = r;
  }
  for (const char* name : {"thlt.vi.gap", "iffdiag", "bipos", "cd.iii"}) {
    ASSERT_NE(find_certificate(name), nullptr) << name;
    EXPECT_EQ(find_certificate(name)->name, name);
  }
  EXPECT_EQ(find_certificate("nope"), nullptr);
}

TEST(Battery, Examples) {
  const Cone K = Cone::orthant(3);
  const BatteryResult iff = run_battery(QuadraticInstance(diag3(1, 1, 2), vec3(0, 0, -2)), K);
  EXPECT_EQ(iff.verdict, BatteryVerdict::ProvesConvex);
  EXPECT_EQ(iff.decided_by, "iffdiag");

  const BatteryResult d = run_battery(QuadraticInstance(diag3(1, 2, 3), VectorX::Zero(3)), K);
  EXPECT_EQ(d.verdict, BatteryVerdict::ProvesNonConvex);
  EXPECT_EQ(d.decided_by, "thlt.iii.pairsum");

  // b <= 2[lambda_min - a_ii] holds here, so the battery does decide it.
  const BatteryResult c = run_battery(QuadraticInstance(diag3(1, 2, 3), vec3(-1, -3, -5)), K);
  EXPECT_EQ(c.verdict, BatteryVerdict::ProvesConvex);
}

TEST(Battery, EarlyStopAndExhaustive) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance inst(diag3(1, 2, 3), VectorX::Zero(3));
  const BatteryResult first = run_battery(inst, K);
  BatteryConfig cfg;
  cfg.exhaustive = true;
  const BatteryResult all = run_battery(inst, K, cfg);
  EXPECT_LT(first.outcomes.size(), all.outcomes.size());
  EXPECT_EQ(all.outcomes.size(), certificate_registry().size());
  EXPECT_EQ(all.verdict, first.verdict);
  for (std::size_t k = 0; k < all.outcomes.size(); ++k)
    EXPECT_EQ(all.outcomes[k].name, certificate_registry()[k].name);
}

TEST(Battery, OnlyFilterAndErrors) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance inst(diag3(1, 2, 3), VectorX::Zero(3));
  BatteryConfig cfg;
  cfg.only = {"bipos"};
  const BatteryResult r = run_battery(inst, K, cfg);
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].name, "bipos");
  EXPECT_EQ(r.verdict, BatteryVerdict::Inconclusive);

  cfg.only = {"nope"};
  EXPECT_THROW(run_battery(inst, K, cfg), InputError);
  EXPECT_THROW(run_battery(inst, Cone::orthant(4)), InputError);
}

TEST(Battery, ShiftNeverFlipsConclusiveVerdict) {
  oracle::Rng rng(401);
  std::uniform_real_distribution<double> lam(-5.0, 5.0);
  BatteryConfig cfg;
  cfg.exhaustive = true;
  for (int k = 0; k < 60; ++k) {
    const Index n = 3 + k % 4;
    MatrixX A = oracle::symmetric(n, rng);
    if (k % 2 == 0) A = A.diagonal().asDiagonal();
    const QuadraticInstance inst(A, oracle::normal(n, rng) - VectorX::Constant(n, 2.0 * (k % 3)));
    const Cone K = Cone::orthant(n);
    const BatteryResult a = run_battery(inst, K, cfg);
    const BatteryResult b = run_battery(shift(inst, lam(rng)), K, cfg);
    EXPECT_NE(a.verdict, BatteryVerdict::Contradiction);
    EXPECT_NE(b.verdict, BatteryVerdict::Contradiction);
    EXPECT_FALSE(flips(a.verdict, b.verdict)) << k;
  }
}

TEST(Battery, NoContradictionsOnRandomInstances) {
  oracle::Rng rng(409);
  BatteryConfig cfg;
  cfg.exhaustive = true;
  for (int k = 0; k < 200; ++k) {
    const Index n = 3 + k % 5;
    const QuadraticInstance inst = oracle::random_instance(n, rng);
    EXPECT_NE(run_battery(inst, Cone::orthant(n), cfg).verdict, BatteryVerdict::Contradiction);
  }
}

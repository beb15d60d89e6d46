#include "oracles.hpp"

#include "sphconv/io.hpp"
#include "sphconv/report.hpp"

#include <gtest/gtest.h>

using namespace sphconv;
using nlohmann::json;

namespace {

json doc3() {
  return json::parse(R"({"n": 3, "A": [[1,0,0],[0,2,0],[0,0,3]], "b": [0,0,0]})");
}

std::string error_of(const json& doc) {
  try {
    parse_instance(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

VerificationReport check(const QuadraticInstance& inst, const Cone& cone, long long budget = 5000) {
  VerificationReport r;
  r.battery = run_battery(inst, cone);
  OracleConfig c;
  c.pair_budget = budget;
  r.oracle = falsify(inst, cone, c);
  aggregate(r, inst, cone);
  return r;
}

}  // namespace

TEST(Io, ParsesDefaults) {
  const InstanceFile f = parse_instance(doc3());
  EXPECT_EQ(f.instance.dim(), 3);
  EXPECT_EQ(f.instance.c(), 0.0);
  EXPECT_TRUE(f.cone.is_orthant());
  EXPECT_EQ(f.instance.A()(2, 2), 3.0);
}

TEST(Io, GeneratedConeAndMeta) {
  json d = doc3();
  d["cone"] = {{"generators", {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}}};
  d["meta"] = {{"family", "x"}};
  d["c"] = 2.5;
  const InstanceFile f = parse_instance(d);
  EXPECT_EQ(f.cone.kind(), Cone::Kind::Generated);
  EXPECT_EQ(f.meta["family"], "x");
  EXPECT_EQ(f.instance.c(), 2.5);
}

TEST(Io, ErrorsNameTheField) {
  json d = doc3();
  d.erase("b");
  EXPECT_NE(error_of(d).find("'b'"), std::string::npos);

  d = doc3();
  d["A"][1] = {0, 1};
  EXPECT_NE(error_of(d).find("A[1]"), std::string::npos);

  d = doc3();
  d["n"] = "three";
  EXPECT_NE(error_of(d).find("'n'"), std::string::npos);

  d = doc3();
  d["b"][2] = "x";
  EXPECT_NE(error_of(d).find("'b[2]'"), std::string::npos);

  d = doc3();
  d["cone"] = "ice";
  EXPECT_NE(error_of(d).find("'cone'"), std::string::npos);

  EXPECT_THROW(load_instance("/nonexistent/instance.json"), InputError);
}

TEST(Io, RoundTripIsBitFaithful) {
  oracle::Rng rng(701);
  for (int k = 0; k < 20; ++k) {
    const QuadraticInstance inst = oracle::random_instance(4, rng);
    const InstanceFile back = parse_instance(json::parse(instance_to_json(inst, Cone::orthant(4)).dump()));
    EXPECT_EQ(back.instance.A(), inst.A());
    EXPECT_EQ(back.instance.b(), inst.b());
    EXPECT_EQ(back.instance.c(), inst.c());

    const VectorX v = oracle::unit_nonneg(4, rng);
    const WitnessPair w{oracle::unit_orthogonal(v, rng), v, -0.125};
    const WitnessPair w2 = witness_from_json(json::parse(witness_to_json(w).dump()));
    EXPECT_EQ(w2.u, w.u);
    EXPECT_EQ(w2.v, w.v);
    EXPECT_EQ(w2.slack, w.slack);
  }
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(exit_code(AggregateVerdict::ConvexCertified), 0);
  EXPECT_EQ(exit_code(AggregateVerdict::NonConvexCertified), 1);
  EXPECT_EQ(exit_code(AggregateVerdict::NumericallyConvex), 2);
  EXPECT_EQ(exit_code(AggregateVerdict::Inconclusive), 3);
  EXPECT_EQ(exit_code(AggregateVerdict::Contradiction), 70);
}

TEST(Report, AggregateExamples) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance bad(Eigen::Vector3d(1, 2, 3).asDiagonal(), VectorX::Zero(3));
  const VerificationReport r = check(bad, K);
  EXPECT_EQ(r.verdict, AggregateVerdict::NonConvexCertified);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(revalidate(bad, K, *r.witness, -kWitnessTol));

  const QuadraticInstance ok(Eigen::Vector3d(1, 1, 2).asDiagonal(), Eigen::Vector3d(0, 0, -2));
  EXPECT_EQ(check(ok, K).verdict, AggregateVerdict::ConvexCertified);
}

TEST(Report, OracleWitnessAloneCertifiesNonConvexity) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance bad(Eigen::Vector3d(1, 2, 3).asDiagonal(), VectorX::Zero(3));
  VerificationReport r;
  BatteryConfig only;
  only.only = {"bipos"};
  r.battery = run_battery(bad, K, only);
  r.oracle = falsify(bad, K, {});
  aggregate(r, bad, K);
  EXPECT_EQ(r.verdict, AggregateVerdict::NonConvexCertified);
  EXPECT_EQ(r.witness_source.rfind("oracle", 0), 0u);
}

TEST(Report, BatteryOracleConflictIsContradiction) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance bad(Eigen::Vector3d(1, 2, 3).asDiagonal(), VectorX::Zero(3));
  VerificationReport r;
  r.battery.verdict = BatteryVerdict::ProvesConvex;
  r.battery.decided_by = "fake";
  r.oracle = falsify(bad, K, {});
  aggregate(r, bad, K);
  EXPECT_EQ(r.verdict, AggregateVerdict::Contradiction);
  EXPECT_EQ(exit_code(r.verdict), 70);
}

TEST(Report, JsonSchemaAndConsistency) {
  const Cone K = Cone::orthant(3);
  const QuadraticInstance bad(Eigen::Vector3d(1, 2, 3).asDiagonal(), VectorX::Zero(3));
  const VerificationReport r = check(bad, K);
  const json j = report_to_json(r, bad, K);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["tool_version"], std::string(kToolVersion));
  EXPECT_EQ(j["instance"]["n"], 3);
  EXPECT_EQ(j["verdict"], std::string(to_string(r.verdict)));
  EXPECT_EQ(j["exit_code"], exit_code(r.verdict));
  EXPECT_FALSE(j["witness"].is_null());
  const WitnessPair w = witness_from_json(j["witness"]);
  EXPECT_TRUE(revalidate(bad, K, w, -kWitnessTol));
  // Parses back, so no NaN or infinity leaked into the document.
  EXPECT_NO_THROW(json::parse(j.dump()));
}

TEST(Report, HashesDependOnData) {
  const double a[3] = {1, 2, 3}, b[3] = {1, 2, 3.0000000000000004};
  EXPECT_EQ(fnv1a(a, 3), fnv1a(a, 3));
  EXPECT_NE(fnv1a(a, 3), fnv1a(b, 3));
}

#include "sphconv/io.hpp"

#include <fstream>
#include <string>

namespace sphconv {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

VectorX vector_field(const json& j, const std::string& field, Index expected) {
  if (!j.is_array()) bad(field, "expected an array of numbers");
  if (expected >= 0 && static_cast<Index>(j.size()) != expected) {
    bad(field, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(j.size()));
  }
  VectorX v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = number(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

InstanceFile parse_instance(const json& doc) {
  if (!doc.is_object()) bad("<root>", "expected a JSON object");
  if (!doc.contains("n")) bad("n", "missing");
  if (!doc["n"].is_number_integer()) bad("n", "expected an integer");
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw < 3) bad("n", "must be at least 3");
  const Index n = static_cast<Index>(n_raw);

  if (!doc.contains("A")) bad("A", "missing");
  const json& jA = doc["A"];
  if (!jA.is_array() || static_cast<Index>(jA.size()) != n) {
    bad("A", "expected " + std::to_string(n) + " rows");
  }
  MatrixX A(n, n);
  for (Index i = 0; i < n; ++i) {
    const VectorX row = vector_field(jA[static_cast<std::size_t>(i)], "A[" + std::to_string(i) + "]", n);
    A.row(i) = row.transpose();
  }

  if (!doc.contains("b")) bad("b", "missing");
  const VectorX b = vector_field(doc["b"], "b", n);
  const double c = doc.contains("c") ? number(doc["c"], "c") : 0.0;

  std::optional<Cone> cone;
  if (!doc.contains("cone") || doc["cone"].is_null()) {
    cone = Cone::orthant(n);
  } else if (doc["cone"].is_string()) {
    if (doc["cone"].get<std::string>() != "nonneg_orthant") {
      bad("cone", "unknown cone \"" + doc["cone"].get<std::string>() + "\"");
    }
    cone = Cone::orthant(n);
  } else if (doc["cone"].is_object() && doc["cone"].contains("generators")) {
    const json& jg = doc["cone"]["generators"];
    if (!jg.is_array() || jg.empty()) bad("cone.generators", "expected a nonempty array");
    std::vector<VectorX> gens;
    for (std::size_t k = 0; k < jg.size(); ++k)
      gens.push_back(vector_field(jg[k], "cone.generators[" + std::to_string(k) + "]", n));
    try {
      cone = Cone::generated(gens);
    } catch (const InputError& e) {
      bad("cone.generators", e.what());
    }
  } else {
    bad("cone", "expected \"nonneg_orthant\" or {\"generators\": [...]}");
  }

  try {
    QuadraticInstance inst(A, b, c);
    return {std::move(inst), std::move(*cone), doc.value("meta", json())};
  } catch (const InputError& e) {
    bad("A", e.what());
  }
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_instance(doc);
}

json vector_to_json(const VectorX& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json instance_to_json(const QuadraticInstance& inst, const Cone& cone, const json& meta) {
  json out;
  out["n"] = inst.dim();
  json A = json::array();
  for (Index i = 0; i < inst.dim(); ++i) A.push_back(vector_to_json(inst.A().row(i).transpose()));
  out["A"] = std::move(A);
  out["b"] = vector_to_json(inst.b());
  out["c"] = inst.c();
  if (cone.kind() == Cone::Kind::NonnegOrthant) {
    out["cone"] = "nonneg_orthant";
  } else {
    json gens = json::array();
    for (Index k = 0; k < cone.generators().cols(); ++k)
      gens.push_back(vector_to_json(cone.generators().col(k)));
    out["cone"] = {{"generators", std::move(gens)}};
  }
  if (!meta.is_null()) out["meta"] = meta;
  return out;
}

json witness_to_json(const WitnessPair& w) {
  return {{"u", vector_to_json(w.u)}, {"v", vector_to_json(w.v)}, {"slack", w.slack}};
}

WitnessPair witness_from_json(const json& doc) {
  if (!doc.is_object()) bad("witness", "expected an object");
  if (!doc.contains("u")) bad("witness.u", "missing");
  if (!doc.contains("v")) bad("witness.v", "missing");
  if (!doc.contains("slack")) bad("witness.slack", "missing");
  WitnessPair w;
  w.u = vector_field(doc["u"], "witness.u", -1);
  w.v = vector_field(doc["v"], "witness.v", -1);
  w.slack = number(doc["slack"], "witness.slack");
  return w;
}

}  // namespace sphconv

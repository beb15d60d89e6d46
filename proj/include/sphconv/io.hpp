#pragma once

// Instance files:
//   {"n": 3, "A": [[...], ...], "b": [...], "c": 0.0,
//    "cone": "nonneg_orthant" | {"generators": [[...], ...]}, "meta": {...}}
// "c" defaults to 0, "cone" to the orthant; "meta" is carried through.

#include "sphconv/cone.hpp"
#include "sphconv/instance.hpp"
#include "sphconv/witness.hpp"

#include <json.hpp>

#include <string>

namespace sphconv {

struct InstanceFile {
  QuadraticInstance instance;
  Cone cone;
  nlohmann::json meta;
};

/// Throws InputError naming the offending field.
InstanceFile parse_instance(const nlohmann::json& doc);
InstanceFile load_instance(const std::string& path);

nlohmann::json instance_to_json(const QuadraticInstance& inst, const Cone& cone,
                                const nlohmann::json& meta = nullptr);

nlohmann::json vector_to_json(const VectorX& v);
nlohmann::json witness_to_json(const WitnessPair& w);
WitnessPair witness_from_json(const nlohmann::json& doc);

}  // namespace sphconv

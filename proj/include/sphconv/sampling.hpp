#pragma once

#include "sphconv/cone.hpp"

#include <cstdint>
#include <random>

namespace sphconv {

using Rng = std::mt19937_64;

/// Child seed for batch `index` of a run seeded with `seed` (splitmix64
/// finalizer over a fixed combination of the two).
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

/// Probability that an orthant draw is masked onto a face first.
inline constexpr double kBoundaryDrawProbability = 0.25;

/// Unit vector in the cone. Orthant draws are |N(0,I)| normalized, with a
/// random subset of coordinates zeroed in a quarter of the draws; generated
/// cones use a random nonnegative combination of generators.
VectorX sample_unit_in_cone(const Cone& cone, Rng& rng);

/// Orthant draw with the given coordinates forced to zero (mask[i] true
/// keeps coordinate i). At least one coordinate must be kept.
VectorX sample_unit_in_orthant_face(const std::vector<bool>& keep, Rng& rng);

/// Uniform unit vector orthogonal to the unit vector v.
VectorX sample_orthogonal_partner(const VectorX& v, Rng& rng);

/// Uniform unit vector in R^n.
VectorX sample_unit(Index n, Rng& rng);

}  // namespace sphconv

#pragma once

#include "sphconv/instance.hpp"
#include "sphconv/sampling.hpp"

#include <string>
#include <string_view>

namespace sphconv {

/// A generated instance with the certificate it was built to exercise and
/// the expected label: "convex", "nonconvex" or "unknown".
struct GeneratedInstance {
  QuadraticInstance instance;
  std::string family;
  std::string target_certificate;
  std::string label;
};

/// Random symmetric A (entries uniform in [-1,1]), b below the spectral gap
/// bound by |N(0,1)| per coordinate.
GeneratedInstance gen_gap(Index n, Rng& rng);

/// Diagonal A with a duplicated minimum. Convex instances sit at or below
/// the bound; nonconvex ones exceed it at exactly one coordinate by a
/// margin drawn from [0.05, 0.5].
GeneratedInstance gen_diag_iff(Index n, Rng& rng, bool convex);

/// Diagonal A with a unique minimum and constant tail; one strictly
/// positive b entry in (0, 2 gap], the rest at -2 gap beta.
GeneratedInstance gen_bipos(Index n, Rng& rng);

/// Random symmetric A, b at the decomposition bound minus |N(0,1)|.
GeneratedInstance gen_cd(Index n, Rng& rng);

/// Unstructured random (A, b, c).
GeneratedInstance gen_random(Index n, Rng& rng);

/// Dispatch by family name: gap, diag-iff, diag-iff-nonconvex, bipos, cd,
/// random. Throws InputError for unknown names or n < 3.
GeneratedInstance generate(std::string_view family, Index n, Rng& rng);

}  // namespace sphconv

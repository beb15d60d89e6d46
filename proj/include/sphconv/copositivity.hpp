#pragma once

#include "sphconv/sampling.hpp"

#include <optional>
#include <string_view>

namespace sphconv {

enum class Copositivity { Copositive, NotCopositive, Unknown };

std::string_view to_string(Copositivity c);

struct CopositivityResult {
  Copositivity status = Copositivity::Unknown;
  /// Nonnegative unit vector with witness^T M witness < 0.
  std::optional<VectorX> witness;
  double witness_value = 0.0;
  /// Ladder step that decided: "nonnegative", "psd", "2x2", "search".
  std::string_view decided_by;
};

/// Euclidean projection onto the unit simplex {x >= 0, sum x = 1}.
VectorX project_to_simplex(const VectorX& y);

/// Three-valued copositivity test for a symmetric M.
///
/// Ladder: entrywise nonnegative; positive semidefinite; exact 1x1/2x2
/// criterion; otherwise `budget` random starts (plus the vertices and the
/// barycenter) of projected gradient descent on x^T M x over the simplex.
/// A simplex point below -1e-10 gives NotCopositive; a clean search gives
/// Unknown, never Copositive.
CopositivityResult copositivity_check(const MatrixX& M, int budget, Rng& rng);

}  // namespace sphconv

#pragma once

#include "histo/fekete.hpp"
#include "histo/supports.hpp"
#include "histo/vandermonde.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace histo {

/// Support families with a known construction.
///   Lgl:                nodal Fekete set (LGL nodes)
///   C1Fekete:           concatenated segments on LGL(r + 1) breakpoints
///   C1FeketeNormalized: concatenated segments maximizing the normalized determinant
///   C2Fekete:           arc-length segments with rho = lambda pi / r
///   UniformNodes:       r equispaced nodes including +-1
///   UniformC1:          r equal concatenated segments
enum class Family { Lgl, C1Fekete, C1FeketeNormalized, C2Fekete, UniformNodes, UniformC1 };

[[nodiscard]] std::string_view to_string(Family family);
[[nodiscard]] std::optional<Family> parse_family(std::string_view name);

/// Data mode under which the family is a Fekete set (Nodal for node families).
[[nodiscard]] Mode natural_mode(Family family);

struct FamilyOptions {
  double lambda = 0.5;  // C2Fekete only, must lie in (0, 1)
  NormalizedOptions normalized;
};

/// Builds the family as a FeketeResult. Uniform families are returned with the
/// matrix log-determinant in the Chebyshev-U basis and method ClosedForm.
/// Throws std::invalid_argument for r out of range or lambda outside (0, 1).
[[nodiscard]] FeketeResult make_family(Family family, std::size_t r, const FamilyOptions& opts = {});

}  // namespace histo

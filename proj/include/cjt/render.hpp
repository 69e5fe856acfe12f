#pragma once

#include "cjt/regions.hpp"

#include <string>

namespace cjt {

/// Deterministic SVG picture of a half-pair: lower/upper paths as polylines,
/// non-boundary II-units shaded, II-regions darkened. Identical input yields
/// byte-identical output.
std::string render_svg(const HalfPair& hp);

}  // namespace cjt

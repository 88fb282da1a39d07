#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffpow/ideal_io.hpp"

namespace diffpow {

/// Rendering request for the exponent set of a two-variable monomial
/// ideal on the lattice [0, extent]: x-power on the horizontal axis,
/// y-power on the vertical axis. Overlays (typically differential
/// powers) draw as nested regions on top of the base ideal.
struct StaircaseRequest {
  MonomialIdeal base;
  std::vector<std::pair<std::string, MonomialIdeal>> overlays;
  enum class Format { Ascii, Svg } format = Format::Ascii;
  ExponentVector extent;
};

/// Componentwise maximum of the generator exponents of the base ideal
/// and all overlays: the smallest extent that shows every corner.
ExponentVector staircase_required_extent(const StaircaseRequest& request);

/// Deterministic ASCII grid (one glyph per lattice point, '.' outside,
/// '#' for the base, digits for overlays, innermost region wins) or an
/// SVG 1.1 document with nested translucent regions and a legend.
std::string render_staircase(const StaircaseRequest& request);

}  // namespace diffpow

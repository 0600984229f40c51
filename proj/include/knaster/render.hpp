#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knaster/continuum.hpp"
#include "knaster/rational.hpp"

namespace knaster {

/// Viewport description for the SVG picture of the finite-depth continuum.
struct RenderSpec {
  std::uint32_t depth = 1;   // prefix length bound for the drawn endpoints
  std::uint32_t levels = 0;  // highest arc level drawn
  std::uint32_t width = 900;
  std::uint32_t height = 750;
  double stroke = 1.0;
  double margin = 30.0;
};

/// The deduplicated arcs of one level over all eventually-constant sequences
/// with prefix length <= depth, sorted by left endpoint. Level 0 yields 2^depth
/// arcs; level k in [1, depth] yields 2^(depth-k); higher levels yield none.
std::vector<Arc> arcs_for_level(std::uint32_t level, std::uint32_t depth);

/// Affine world-to-pixel maps. World x spans [0,1]; world y spans [-1/3, 1/2];
/// both are padded by the margin. Exposed so tests can check endpoint pixels.
double map_x(const RenderSpec& spec, const Rat& x);
double map_y(const RenderSpec& spec, const Rat& y);

/// Complete SVG document with the axis, the arcs for every level up to
/// spec.levels (each path carries a data-level attribute) and labeled ticks at
/// the first three arc centers. Throws std::invalid_argument on out-of-range
/// fields.
std::string render(const RenderSpec& spec);

}  // namespace knaster

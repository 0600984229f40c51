#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <utility>

#include "knaster/binseq.hpp"
#include "knaster/cantor.hpp"
#include "knaster/rational.hpp"

namespace knaster {

enum class Half { Upper, Lower };

/// One semicircle of the bucket-handle: the level-0 family lives in the upper
/// half-plane and joins each Cantor point to its mirror image; each level-k
/// family (k >= 1) lives in the lower half-plane and joins a point of level k
/// to its hat partner.
///
/// Identity is canonical: endpoints are ordered left-to-right by their
/// embeddings and two arcs are equal iff (level, endpoints) agree; the
/// geometry is determined by that pair.
struct Arc {
  std::uint32_t level = 0;
  Rat center;  // abscissa of the center on the x-axis
  Rat radius;
  Half half = Half::Upper;
  std::array<BinSeq, 2> endpoints;  // embed(endpoints[0]) < embed(endpoints[1])

  bool operator==(const Arc& o) const {
    return level == o.level && endpoints == o.endpoints;
  }
};

/// Strict (level, endpoints) order; usable for std::set / sorting.
bool arc_less(const Arc& a, const Arc& b);

/// All fields equal, not just the canonical identity. Used by certificate
/// checks to reject forged geometry.
bool same_geometry(const Arc& a, const Arc& b);

/// 1/2 for k = 0; for k >= 1 the midpoint of a level-k point and its hat
/// partner, which is independent of the chosen point and equals 5/(2*3^k).
Rat center_x(std::uint32_t k);

/// Level-0 arc joining s to its complement, or level-k arc joining s to
/// hat(s). Throws std::invalid_argument unless k == 0 or level(s) == k.
Arc make_arc(std::uint32_t k, const BinSeq& s);

/// Point at parameter t in [0,1] along the semicircle from endpoints[0] to
/// endpoints[1], staying in the arc's half-plane. Rendering support; the only
/// floating-point surface of the geometry. Throws std::domain_error for t
/// outside [0,1].
std::pair<double, double> point_on(const Arc& arc, double t);

/// Representative sequence for the arc's path component: the left endpoint.
/// Every point of the arc is path-connected to it.
BinSeq arc_class(const Arc& arc);

std::ostream& operator<<(std::ostream& os, const Arc& arc);

}  // namespace knaster

#pragma once

#include <optional>
#include <vector>

#include "knaster/binseq.hpp"
#include "knaster/continuum.hpp"

namespace knaster {

/// An explicit chain of arcs certifying that two Cantor points are
/// path-connected in the bucket-handle. via lists the |arcs|+1 intermediate
/// sequences; consecutive via entries are exactly the endpoints of the arc
/// between them.
struct PathWitness {
  BinSeq from;
  BinSeq to;
  std::vector<Arc> arcs;
  std::vector<BinSeq> via;
};

/// Builds a witness whenever e0_star(a, b) holds, nullopt otherwise.
///
/// Recursive construction over the witness level: a disagreement at the top
/// index is routed through the level-(n+1) hat arc of 0^n 1 (tail), flanked by
/// one mirror arc and two chains one level down. Complement-related pairs
/// reduce to the equal case against complement(b) plus one closing level-0
/// arc. Arc count is bounded by 2^(n+1) - 1 and arc levels by n + 1.
///
/// Throws std::length_error if the chain would exceed an internal safety cap
/// (the construction is exponential in the witness level by design).
std::optional<PathWitness> synthesize(const BinSeq& a, const BinSeq& b);

/// Full certificate check: chaining, arc validity (each arc must reproduce
/// make_arc of its level and left endpoint, geometry included), and
/// e0_star(from, to).
bool verify(const PathWitness& w);

/// Removes immediate backtracking (the same arc traversed twice in a row)
/// until none remains. Requires verify(w); throws std::invalid_argument
/// otherwise. The result verifies and keeps from/to.
PathWitness simplify(const PathWitness& w);

/// Wraps a raw arc chain starting at `from` into a witness, deriving via by
/// walking endpoint to endpoint. Throws std::invalid_argument if consecutive
/// arcs do not share an endpoint.
PathWitness witness_from_arcs(const BinSeq& from, std::vector<Arc> arcs);

}  // namespace knaster

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "knaster/continuum.hpp"
#include "knaster/witness.hpp"

namespace knaster {

/// Outcome of checking both directions of the path-connectedness theorem on a
/// finite truncation: connectivity must imply e0_star (soundness), and
/// e0_star pairs whose witness level fits the truncation must be connected
/// (completeness).
struct TheoremReport {
  std::uint32_t prefix_bound = 0;  // N
  std::uint32_t level_bound = 0;   // K
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<BinSeq, BinSeq>> soundness_violations;
  std::vector<std::pair<BinSeq, BinSeq>> completeness_violations;

  bool ok() const { return soundness_violations.empty() && completeness_violations.empty(); }
};

/// Finite truncation of the bucket-handle as a graph. Nodes are the canonical
/// eventually-constant sequences with prefix length <= N (there are exactly
/// 2^(N+1) of them); edges are the level-0 mirror arcs plus the level-k hat
/// arcs (k <= K) whose partner stays inside the node set. Connectivity is
/// tracked twice: union-find at build time and BFS on demand, as independent
/// answers.
class ConnGraph {
public:
  /// Requires N >= 1 and K >= 1 (std::invalid_argument otherwise).
  static ConnGraph build(std::uint32_t prefix_bound, std::uint32_t level_bound);

  const std::vector<BinSeq>& nodes() const { return nodes_; }
  const std::vector<Arc>& edges() const { return edges_; }
  std::uint32_t prefix_bound() const { return prefix_bound_; }
  std::uint32_t level_bound() const { return level_bound_; }

  bool is_node(const BinSeq& s) const { return index_.contains(s); }
  /// Throws std::invalid_argument for non-nodes.
  std::size_t node_index(const BinSeq& s) const;

  /// Same union-find component. Throws std::invalid_argument for non-nodes.
  bool connected(const BinSeq& a, const BinSeq& b) const;

  /// Minimum-hop arc chain from a to b (empty for a == b), nullopt when the
  /// nodes are not connected. BFS, independent of the union-find answer.
  std::optional<std::vector<Arc>> shortest_chain(const BinSeq& a, const BinSeq& b) const;

  std::size_t component_count() const;

  /// Checker self-test hook: adds an edge (and missing endpoints) without any
  /// validity requirement, so tests can plant soundness counterexamples.
  void inject_raw_edge(const BinSeq& a, const BinSeq& b);

private:
  ConnGraph() = default;

  std::size_t ensure_node(const BinSeq& s);
  void add_edge(const Arc& arc);
  std::size_t find(std::size_t i) const;
  void unite(std::size_t a, std::size_t b);

  std::uint32_t prefix_bound_ = 0;
  std::uint32_t level_bound_ = 0;
  std::vector<BinSeq> nodes_;
  std::map<BinSeq, std::size_t> index_;
  std::vector<Arc> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;  // (node, edge)
  std::vector<std::size_t> parent_;  // flattened after build
  std::vector<std::size_t> rank_;
};

/// Runs both direction checks over all node pairs of g.
TheoremReport check_graph(const ConnGraph& g);

/// check_graph over build(N, N+1). N is capped by the KNASTER_MAX_N
/// environment variable (default 7); std::invalid_argument beyond the cap.
TheoremReport check_theorem(std::uint32_t prefix_bound);

}  // namespace knaster

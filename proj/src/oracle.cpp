#include "knaster/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace knaster {

std::size_t ConnGraph::node_index(const BinSeq& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) {
    throw std::invalid_argument("not a node of the truncation graph: " + s.prefix() +
                                "(" + s.period() + ")");
  }
  return it->second;
}

std::size_t ConnGraph::find(std::size_t i) const {
  while (parent_[i] != i) i = parent_[i];
  return i;
}

void ConnGraph::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  rank_[a] += rank_[b];
}

std::size_t ConnGraph::ensure_node(const BinSeq& s) {
  if (const auto it = index_.find(s); it != index_.end()) return it->second;
  const std::size_t i = nodes_.size();
  nodes_.push_back(s);
  index_.emplace(s, i);
  adj_.emplace_back();
  parent_.push_back(i);
  rank_.push_back(1);
  return i;
}

void ConnGraph::add_edge(const Arc& arc) {
  const std::size_t a = node_index(arc.endpoints[0]);
  const std::size_t b = node_index(arc.endpoints[1]);
  const std::size_t e = edges_.size();
  edges_.push_back(arc);
  adj_[a].emplace_back(b, e);
  adj_[b].emplace_back(a, e);
  unite(a, b);
}

ConnGraph ConnGraph::build(std::uint32_t prefix_bound, std::uint32_t level_bound) {
  if (prefix_bound < 1 || level_bound < 1)
    throw std::invalid_argument("build requires prefix and level bounds >= 1");

  ConnGraph g;
  g.prefix_bound_ = prefix_bound;
  g.level_bound_ = level_bound;

  // Every eventually-constant sequence w*(0)^inf / w*(1)^inf with |w| <= N;
  // canonicalization collapses duplicates to exactly 2^(N+1) nodes.
  std::set<BinSeq> universe;
  for (std::uint32_t len = 0; len <= prefix_bound; ++len) {
    for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
      std::string w(len, '0');
      for (std::uint32_t i = 0; i < len; ++i)
        if (mask & (1ull << i)) w[i] = '1';
      universe.insert(BinSeq::make(w, "0"));
      universe.insert(BinSeq::make(w, "1"));
    }
  }
  for (const BinSeq& s : universe) g.ensure_node(s);

  // Deduplicated by canonical arc identity. A level-(N+1) hat partner can
  // need prefix length N+1 and fall outside the node set; such arcs are
  // skipped (completeness only ever needs levels <= N).
  std::set<Arc, decltype(&arc_less)> arcs(&arc_less);
  for (const BinSeq& s : g.nodes_) {
    arcs.insert(make_arc(0, s));
    if (const auto k = level(s); k && *k <= level_bound && g.is_node(hat(s)))
      arcs.insert(make_arc(*k, s));
  }
  for (const Arc& arc : arcs) g.add_edge(arc);

  // Flatten the forest so later reads never need to chase parent chains.
  for (std::size_t i = 0; i < g.parent_.size(); ++i) g.parent_[i] = g.find(i);
  return g;
}

bool ConnGraph::connected(const BinSeq& a, const BinSeq& b) const {
  return find(node_index(a)) == find(node_index(b));
}

std::optional<std::vector<Arc>> ConnGraph::shortest_chain(const BinSeq& a,
                                                          const BinSeq& b) const {
  const std::size_t src = node_index(a);
  const std::size_t dst = node_index(b);
  if (src == dst) return std::vector<Arc>{};

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev_node(nodes_.size(), kUnseen);
  std::vector<std::size_t> prev_edge(nodes_.size(), kUnseen);
  std::deque<std::size_t> queue{src};
  prev_node[src] = src;
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    if (at == dst) break;
    for (const auto& [next, e] : adj_[at]) {
      if (prev_node[next] != kUnseen) continue;
      prev_node[next] = at;
      prev_edge[next] = e;
      queue.push_back(next);
    }
  }
  if (prev_node[dst] == kUnseen) return std::nullopt;

  std::vector<Arc> chain;
  for (std::size_t at = dst; at != src; at = prev_node[at])
    chain.push_back(edges_[prev_edge[at]]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::size_t ConnGraph::component_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (find(i) == i) ++count;
  return count;
}

void ConnGraph::inject_raw_edge(const BinSeq& a, const BinSeq& b) {
  if (a == b) throw std::invalid_argument("inject_raw_edge: endpoints must differ");
  ensure_node(a);
  ensure_node(b);
  Arc forged;
  forged.level = 0;
  forged.half = Half::Upper;
  forged.endpoints = {a, b};
  if (lex_compare(forged.endpoints[0], forged.endpoints[1]) > 0)
    std::swap(forged.endpoints[0], forged.endpoints[1]);
  const Rat left = embed(forged.endpoints[0]).value();
  const Rat right = embed(forged.endpoints[1]).value();
  forged.center = (left + right) / 2;
  forged.radius = (right - left) / 2;
  add_edge(forged);
}

TheoremReport check_graph(const ConnGraph& g) {
  TheoremReport report;
  report.prefix_bound = g.prefix_bound();
  report.level_bound = g.level_bound();
  report.node_count = g.nodes().size();
  report.edge_count = g.edges().size();

  const auto& nodes = g.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      ++report.pairs_checked;
      const bool conn = g.connected(nodes[i], nodes[j]);
      const auto wl = witness_level(nodes[i], nodes[j]);
      if (conn && !wl) report.soundness_violations.emplace_back(nodes[i], nodes[j]);
      if (wl && wl->n + 1 <= g.prefix_bound() && !conn)
        report.completeness_violations.emplace_back(nodes[i], nodes[j]);
    }
  }
  return report;
}

TheoremReport check_theorem(std::uint32_t prefix_bound) {
  std::uint32_t cap = 7;
  if (const char* env = std::getenv("KNASTER_MAX_N"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = static_cast<std::uint32_t>(v);
  }
  if (prefix_bound > cap) {
    throw std::invalid_argument("prefix bound " + std::to_string(prefix_bound) +
                                " exceeds cap " + std::to_string(cap) +
                                " (KNASTER_MAX_N)");
  }
  return check_graph(ConnGraph::build(prefix_bound, prefix_bound + 1));
}

}  // namespace knaster

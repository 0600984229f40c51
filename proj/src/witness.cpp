#include "knaster/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knaster {

namespace {

constexpr std::size_t kMaxArcs = 1u << 22;

struct Chain {
  std::vector<Arc> arcs;
  std::vector<BinSeq> via;  // arcs.size() + 1 entries
};

void reverse_chain(Chain& c) {
  std::reverse(c.arcs.begin(), c.arcs.end());
  std::reverse(c.via.begin(), c.via.end());
}

void append_chain(Chain& out, Chain&& tail) {
  // tail.via.front() must equal out.via.back(); drop the duplicate junction.
  out.arcs.insert(out.arcs.end(), std::make_move_iterator(tail.arcs.begin()),
                  std::make_move_iterator(tail.arcs.end()));
  out.via.insert(out.via.end(), std::make_move_iterator(tail.via.begin() + 1),
                 std::make_move_iterator(tail.via.end()));
}

// Chain from a to c under the precondition a F_level c (agreement from
// `level` on). Mirrors the inductive step: a disagreement at the top index
// m = level-1 is resolved through u = 0^m 1 (p_{m+1}, ...), its hat partner,
// and that partner's mirror image.
Chain synth_eq(std::uint32_t lvl, const BinSeq& a, const BinSeq& c) {
  if (lvl == 0) return Chain{{}, {a}};
  const std::uint32_t m = lvl - 1;
  if (a.get(m) == c.get(m)) return synth_eq(m, a, c);

  const bool a_has_one = a.get(m) == 1;
  const BinSeq& p = a_has_one ? a : c;  // the side with bit 1 at index m
  const BinSeq& q = a_has_one ? c : a;

  const BinSeq u = prepend(std::string(m, '0') + '1', shift(p, m + 1));
  const BinSeq u_hat = hat(u);                 // 0^m 1 with flipped tail
  const BinSeq u_mirror = complement(u_hat);   // 1^m 0 with p's tail

  Chain out = synth_eq(m, p, u);
  out.arcs.push_back(make_arc(m + 1, u));
  out.via.push_back(u_hat);
  out.arcs.push_back(make_arc(0, u_hat));
  out.via.push_back(u_mirror);
  append_chain(out, synth_eq(m, u_mirror, q));
  if (out.arcs.size() > kMaxArcs)
    throw std::length_error("synthesize: witness chain exceeds safety cap");
  if (!a_has_one) reverse_chain(out);
  return out;
}

}  // namespace

std::optional<PathWitness> synthesize(const BinSeq& a, const BinSeq& b) {
  const auto wl = witness_level(a, b);
  if (!wl) return std::nullopt;
  Chain chain;
  if (wl->mode == Mode::Equal) {
    chain = synth_eq(wl->n, a, b);
  } else {
    const BinSeq b_bar = complement(b);
    chain = synth_eq(wl->n, a, b_bar);
    chain.arcs.push_back(make_arc(0, b_bar));
    chain.via.push_back(b);
  }
  return PathWitness{a, b, std::move(chain.arcs), std::move(chain.via)};
}

bool verify(const PathWitness& w) {
  if (w.via.size() != w.arcs.size() + 1) return false;
  if (w.via.front() != w.from || w.via.back() != w.to) return false;
  if (!e0_star(w.from, w.to)) return false;
  for (std::size_t j = 0; j < w.arcs.size(); ++j) {
    const Arc& arc = w.arcs[j];
    Arc rebuilt;
    try {
      rebuilt = make_arc(arc.level, arc.endpoints[0]);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (!same_geometry(arc, rebuilt)) return false;
    const bool forward = w.via[j] == arc.endpoints[0] && w.via[j + 1] == arc.endpoints[1];
    const bool backward = w.via[j] == arc.endpoints[1] && w.via[j + 1] == arc.endpoints[0];
    if (!forward && !backward) return false;
  }
  return true;
}

PathWitness simplify(const PathWitness& w) {
  if (!verify(w)) throw std::invalid_argument("simplify: witness does not verify");
  PathWitness out;
  out.from = w.from;
  out.to = w.to;
  out.via.push_back(w.from);
  for (std::size_t j = 0; j < w.arcs.size(); ++j) {
    // Arcs meet only at endpoints, so an immediate repeat always walks back.
    if (!out.arcs.empty() && out.arcs.back() == w.arcs[j]) {
      out.arcs.pop_back();
      out.via.pop_back();
    } else {
      out.arcs.push_back(w.arcs[j]);
      out.via.push_back(w.via[j + 1]);
    }
  }
  return out;
}

PathWitness witness_from_arcs(const BinSeq& from, std::vector<Arc> arcs) {
  PathWitness w;
  w.from = from;
  w.via.push_back(from);
  for (const Arc& arc : arcs) {
    const BinSeq& at = w.via.back();
    if (at == arc.endpoints[0])
      w.via.push_back(arc.endpoints[1]);
    else if (at == arc.endpoints[1])
      w.via.push_back(arc.endpoints[0]);
    else
      throw std::invalid_argument("witness_from_arcs: chain broken");
  }
  w.to = w.via.back();
  w.arcs = std::move(arcs);
  return w;
}

}  // namespace knaster

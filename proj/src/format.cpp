#include "knaster/format.hpp"

#include <sstream>
#include <stdexcept>

#include "knaster/rational.hpp"

namespace knaster {

namespace {

bool all_bits(std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

}  // namespace

BinSeq parse_seq(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close != text.size() - 1 || close <= open) {
    throw std::invalid_argument("sequence must look like BITS?(BITS): " + std::string(text));
  }
  const std::string_view prefix = text.substr(0, open);
  const std::string_view period = text.substr(open + 1, close - open - 1);
  if (period.empty() || !all_bits(prefix) || !all_bits(period)) {
    throw std::invalid_argument("sequence must look like BITS?(BITS): " + std::string(text));
  }
  return BinSeq::make(prefix, period);
}

std::string seq_to_string(const BinSeq& s) {
  return s.prefix() + "(" + s.period() + ")";
}

Json arc_to_json(const Arc& arc) {
  Json j;
  j["level"] = arc.level;
  j["center"] = rat_to_string(arc.center);
  j["radius"] = rat_to_string(arc.radius);
  j["half"] = arc.half == Half::Upper ? "upper" : "lower";
  j["endpoints"] = Json::array({seq_to_string(arc.endpoints[0]), seq_to_string(arc.endpoints[1])});
  return j;
}

Json witness_to_json(const PathWitness& w) {
  Json j;
  j["from"] = seq_to_string(w.from);
  j["to"] = seq_to_string(w.to);
  Json via = Json::array();
  for (const BinSeq& s : w.via) via.push_back(seq_to_string(s));
  j["via"] = std::move(via);
  Json arcs = Json::array();
  for (const Arc& a : w.arcs) arcs.push_back(arc_to_json(a));
  j["arcs"] = std::move(arcs);
  return j;
}

Json witness_level_to_json(const WitnessLevel& wl) {
  Json j;
  j["n"] = wl.n;
  j["mode"] = wl.mode == Mode::Equal ? "equal" : "complement";
  return j;
}

Json report_to_json(const TheoremReport& report) {
  Json j;
  j["N"] = report.prefix_bound;
  j["K"] = report.level_bound;
  j["nodes"] = report.node_count;
  j["edges"] = report.edge_count;
  j["pairs_checked"] = report.pairs_checked;
  auto pairs = [](const std::vector<std::pair<BinSeq, BinSeq>>& v) {
    Json out = Json::array();
    for (const auto& [a, b] : v) {
      out.push_back(Json::array({seq_to_string(a), seq_to_string(b)}));
    }
    return out;
  };
  j["soundness_violations"] = pairs(report.soundness_violations);
  j["completeness_violations"] = pairs(report.completeness_violations);
  return j;
}

std::string witness_to_text(const PathWitness& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    out << seq_to_string(w.via[i]) << " --γ^" << w.arcs[i].level << "--> "
        << seq_to_string(w.via[i + 1]) << "\n";
  }
  return out.str();
}

}  // namespace knaster

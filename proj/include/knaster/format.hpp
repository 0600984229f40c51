#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "knaster/binseq.hpp"
#include "knaster/oracle.hpp"
#include "knaster/witness.hpp"

namespace knaster {

using Json = nlohmann::ordered_json;

/// Parses the sequence grammar BITS? '(' BITS ')'; the result is canonical.
/// Throws std::invalid_argument on malformed input.
BinSeq parse_seq(std::string_view text);

/// Canonical "prefix(period)" form; parse_seq(seq_to_string(s)) == s.
std::string seq_to_string(const BinSeq& s);

Json arc_to_json(const Arc& arc);
Json witness_to_json(const PathWitness& w);
Json witness_level_to_json(const WitnessLevel& wl);
Json report_to_json(const TheoremReport& report);

/// One line per hop: "SEQ --γ^k--> SEQ".
std::string witness_to_text(const PathWitness& w);

}  // namespace knaster

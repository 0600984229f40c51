// Command line frontend: equivalence deciders, the Cantor embedding, path
// witness synthesis, the finite connectivity checker, and the SVG renderer.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "knaster/binseq.hpp"
#include "knaster/cantor.hpp"
#include "knaster/format.hpp"
#include "knaster/oracle.hpp"
#include "knaster/rational.hpp"
#include "knaster/render.hpp"
#include "knaster/witness.hpp"

namespace {

using namespace knaster;

int run_decide(const std::string& rel, std::optional<std::uint32_t> n, const std::string& a_text,
               const std::string& b_text) {
  const BinSeq a = parse_seq(a_text);
  const BinSeq b = parse_seq(b_text);
  bool answer = false;
  if (rel == "fn") {
    if (!n) throw std::invalid_argument("--rel fn requires --n");
    answer = f_n(a, b, *n);
    std::cout << (answer ? "true" : "false") << "\n";
    return 0;
  }
  answer = rel == "e0" ? e0(a, b) : e0_star(a, b);
  std::cout << (answer ? "true" : "false") << "\n";
  if (answer) {
    const auto wl = witness_level(a, b);
    std::cout << witness_level_to_json(*wl).dump() << "\n";
  }
  return 0;
}

int run_embed(const std::string& a_text, std::optional<unsigned> digits) {
  const CantorPoint p = embed(parse_seq(a_text));
  std::cout << rat_to_string(p.value()) << "\n";
  if (digits) std::cout << rat_to_decimal(p.value(), *digits) << "\n";
  return 0;
}

int run_unembed(const std::string& rat_text) {
  const auto s = unembed(parse_rat(rat_text));
  if (!s) {
    std::cout << "NONE\n";
    return 1;
  }
  std::cout << seq_to_string(*s) << "\n";
  return 0;
}

int run_path(const std::string& a_text, const std::string& b_text, const std::string& format,
             bool want_simplify) {
  const BinSeq a = parse_seq(a_text);
  const BinSeq b = parse_seq(b_text);
  auto w = synthesize(a, b);
  if (!w) {
    std::cout << "NONE\n";
    return 1;
  }
  if (want_simplify) *w = simplify(*w);
  if (format == "text") {
    std::cout << witness_to_text(*w);
  } else {
    std::cout << witness_to_json(*w).dump(2) << "\n";
  }
  return 0;
}

int run_oracle(std::uint32_t prefix, const std::string& out_path) {
  const TheoremReport report = check_theorem(prefix);
  const std::string text = report_to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
  }
  return report.ok() ? 0 : 1;
}

int run_render(const RenderSpec& spec, const std::string& out_path) {
  const std::string svg = render(spec);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for the bucket-handle continuum"};
  app.require_subcommand(1);

  std::string rel;
  std::uint32_t n_value = 0;
  std::string seq_a, seq_b, rat_text;
  unsigned digits_value = 0;
  std::string format = "json";
  bool want_simplify = false;
  std::uint32_t prefix = 0;
  std::string out_path;
  RenderSpec spec;

  auto* decide = app.add_subcommand("decide", "Decide fn/e0/e0star on two sequences");
  decide->add_option("--rel", rel, "Relation: fn, e0, or e0star")
      ->required()
      ->check(CLI::IsMember({"fn", "e0", "e0star"}));
  auto* n_opt = decide->add_option("--n", n_value, "Agreement index for --rel fn");
  decide->add_option("a", seq_a, "First sequence")->required();
  decide->add_option("b", seq_b, "Second sequence")->required();

  auto* embed_cmd = app.add_subcommand("embed", "Map a sequence into the Cantor set");
  embed_cmd->add_option("seq", seq_a, "Sequence")->required();
  auto* digits_opt = embed_cmd->add_option("--digits", digits_value, "Also print this many decimal digits");

  auto* unembed_cmd = app.add_subcommand("unembed", "Recover the sequence for a rational, or NONE");
  unembed_cmd->add_option("rational", rat_text, "Rational p/q in [0,1]")->required();

  auto* path_cmd = app.add_subcommand("path", "Synthesize an arc chain between two sequences");
  path_cmd->add_option("a", seq_a, "First sequence")->required();
  path_cmd->add_option("b", seq_b, "Second sequence")->required();
  path_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  path_cmd->add_flag("--simplify", want_simplify, "Remove immediately repeated arcs");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive connectivity check at one prefix bound");
  oracle_cmd->add_option("--prefix", prefix, "Prefix length bound N")->required();
  oracle_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG picture of the truncated continuum");
  render_cmd->add_option("--depth", spec.depth, "Prefix depth per level")->required();
  render_cmd->add_option("--levels", spec.levels, "Highest arc level drawn")->required();
  render_cmd->add_option("--width", spec.width, "Viewport width in px");
  render_cmd->add_option("--height", spec.height, "Viewport height in px");
  render_cmd->add_option("-o", out_path, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*decide) {
      std::optional<std::uint32_t> n;
      if (*n_opt) n = n_value;
      return run_decide(rel, n, seq_a, seq_b);
    }
    if (*embed_cmd) {
      std::optional<unsigned> digits;
      if (*digits_opt) digits = digits_value;
      return run_embed(seq_a, digits);
    }
    if (*unembed_cmd) return run_unembed(rat_text);
    if (*path_cmd) return run_path(seq_a, seq_b, format, want_simplify);
    if (*oracle_cmd) return run_oracle(prefix, out_path);
    if (*render_cmd) return run_render(spec, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

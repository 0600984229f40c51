#include "knaster/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "knaster/binseq.hpp"

namespace knaster {

namespace {

void validate(const RenderSpec& spec) {
  if (spec.depth < 1) throw std::invalid_argument("render depth must be >= 1");
  if (spec.width == 0 || spec.height == 0) {
    throw std::invalid_argument("render viewport must be positive");
  }
  if (spec.stroke <= 0.0) throw std::invalid_argument("stroke width must be positive");
  if (spec.margin < 0.0 || 2.0 * spec.margin >= spec.width || 2.0 * spec.margin >= spec.height) {
    throw std::invalid_argument("margin does not fit the viewport");
  }
}

// World y spans [-1/3, 1/2]: the deepest lower arc reaches y = -1/3 (the
// level-1 arc through x_1 has radius < 1/3) and the outer arc reaches y = 1/2.
constexpr double kWorldHeight = 5.0 / 6.0;
constexpr double kWorldTop = 0.5;

double scale_x(const RenderSpec& spec) { return spec.width - 2.0 * spec.margin; }
double scale_y(const RenderSpec& spec) { return (spec.height - 2.0 * spec.margin) / kWorldHeight; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<BinSeq> constant_tail_nodes(std::uint32_t depth) {
  std::set<BinSeq> out;
  std::vector<std::string> words{""};
  for (std::uint32_t len = 0; len <= depth; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      out.insert(BinSeq::make(w, "0"));
      out.insert(BinSeq::make(w, "1"));
      if (len < depth) {
        next.push_back(w + '0');
        next.push_back(w + '1');
      }
    }
    words = std::move(next);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Arc> arcs_for_level(std::uint32_t level, std::uint32_t depth) {
  std::set<Arc, decltype(&arc_less)> unique(&arc_less);
  for (const BinSeq& s : constant_tail_nodes(depth)) {
    if (level == 0) {
      unique.insert(make_arc(0, s));
    } else if (const auto k = knaster::level(s); k && *k == level) {
      unique.insert(make_arc(level, s));
    }
  }
  return {unique.begin(), unique.end()};
}

double map_x(const RenderSpec& spec, const Rat& x) {
  return spec.margin + x.get_d() * scale_x(spec);
}

double map_y(const RenderSpec& spec, const Rat& y) {
  return spec.margin + (kWorldTop - y.get_d()) * scale_y(spec);
}

std::string render(const RenderSpec& spec) {
  validate(spec);
  const double axis_y = map_y(spec, Rat(0));
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  out << "  <line x1=\"" << fmt(map_x(spec, Rat(0))) << "\" y1=\"" << fmt(axis_y) << "\" x2=\""
      << fmt(map_x(spec, Rat(1))) << "\" y2=\"" << fmt(axis_y)
      << "\" stroke=\"#999999\" stroke-width=\"" << fmt(spec.stroke * 0.75) << "\"/>\n";

  for (std::uint32_t k = 0; k <= spec.levels; ++k) {
    for (const Arc& arc : arcs_for_level(k, spec.depth)) {
      const double x0 = map_x(spec, embed(arc.endpoints[0]).value());
      const double x1 = map_x(spec, embed(arc.endpoints[1]).value());
      const double rx = arc.radius.get_d() * scale_x(spec);
      const double ry = arc.radius.get_d() * scale_y(spec);
      const int sweep = arc.half == Half::Upper ? 1 : 0;
      out << "  <path d=\"M " << fmt(x0) << " " << fmt(axis_y) << " A " << fmt(rx) << " "
          << fmt(ry) << " 0 0 " << sweep << " " << fmt(x1) << " " << fmt(axis_y)
          << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt(spec.stroke)
          << "\" data-level=\"" << k << "\"/>\n";
    }
  }

  for (std::uint32_t k = 0; k < 3; ++k) {
    const double cx = map_x(spec, center_x(k));
    out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(axis_y)
        << "\" r=\"2.5\" fill=\"#333333\"/>\n";
    out << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(axis_y + 16.0)
        << "\" font-family=\"serif\" font-size=\"13\" text-anchor=\"middle\">x" << k
        << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace knaster

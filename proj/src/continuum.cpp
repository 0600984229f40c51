#include "knaster/continuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace knaster {

bool arc_less(const Arc& a, const Arc& b) {
  if (a.level != b.level) return a.level < b.level;
  if (int c = lex_compare(a.endpoints[0], b.endpoints[0]); c != 0) return c < 0;
  return lex_compare(a.endpoints[1], b.endpoints[1]) < 0;
}

bool same_geometry(const Arc& a, const Arc& b) {
  return a == b && a.half == b.half && cmp(a.center, b.center) == 0 &&
         cmp(a.radius, b.radius) == 0;
}

Rat center_x(std::uint32_t k) {
  if (k == 0) return make_rat(1, 2);
  // Midpoint definition with the canonical level-k witness 0^(k-1) 1 (0)^inf,
  // cross-checked against the closed form.
  const BinSeq s = BinSeq::make(std::string(k - 1, '0') + '1', "0");
  const Rat mid = (embed(s).value() + embed(hat(s)).value()) / 2;
  const Rat closed = make_rat(5, 2 * pow3(k));
  if (cmp(mid, closed) != 0)
    throw std::logic_error("center_x: embed-based midpoint disagrees with 5/(2*3^k)");
  return mid;
}

Arc make_arc(std::uint32_t k, const BinSeq& s) {
  Arc arc;
  arc.level = k;
  arc.half = (k == 0) ? Half::Upper : Half::Lower;
  if (k == 0) {
    arc.endpoints = {s, complement(s)};
  } else {
    const auto lv = level(s);
    if (!lv || *lv != k)
      throw std::invalid_argument("make_arc: sequence is not of level " + std::to_string(k));
    arc.endpoints = {s, hat(s)};
  }
  if (lex_compare(arc.endpoints[0], arc.endpoints[1]) > 0)
    std::swap(arc.endpoints[0], arc.endpoints[1]);
  arc.center = center_x(k);
  // The left endpoint lies strictly left of the center: Cantor points avoid
  // every center abscissa, so the radius is positive.
  arc.radius = arc.center - embed(arc.endpoints[0]).value();
  return arc;
}

std::pair<double, double> point_on(const Arc& arc, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("point_on: t outside [0,1]");
  const double c = arc.center.get_d();
  const double r = arc.radius.get_d();
  const double theta = std::numbers::pi * (1.0 - t);
  const double y = r * std::sin(theta);
  return {c + r * std::cos(theta), arc.half == Half::Upper ? y : -y};
}

BinSeq arc_class(const Arc& arc) { return arc.endpoints[0]; }

std::ostream& operator<<(std::ostream& os, const Arc& arc) {
  return os << "gamma^" << arc.level << '{' << arc.endpoints[0] << ", "
            << arc.endpoints[1] << '}';
}

}  // namespace knaster

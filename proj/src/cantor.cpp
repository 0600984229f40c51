#include "knaster/cantor.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace knaster {

namespace {

// Word over {0,1} read as a base-3 integer.
Int base3_value(const std::string& w) {
  Int v = 0;
  for (char c : w) v = 3 * v + (c - '0');
  return v;
}

}  // namespace

CantorPoint embed(const BinSeq& s) {
  const unsigned long m = s.prefix().size();
  const unsigned long r = s.period().size();
  const Int p3m = pow3(m);
  // prefix part + 3^-m * (periodic tail as a geometric series)
  Rat value = make_rat(2 * base3_value(s.prefix()), p3m) +
              make_rat(2 * base3_value(s.period()), p3m * (pow3(r) - 1));
  return CantorPoint(std::move(value));
}

std::optional<BinSeq> unembed(const Rat& q) {
  if (q < 0 || q > 1) return std::nullopt;
  // Repeated triadic digit extraction; the state (the remaining fraction) is
  // rational with bounded denominator, so it must eventually revisit itself.
  std::map<Rat, std::size_t> seen;
  std::string digits;
  Rat state = q;
  for (;;) {
    if (auto it = seen.find(state); it != seen.end()) {
      return BinSeq::make(digits.substr(0, it->second), digits.substr(it->second));
    }
    seen.emplace(state, digits.size());
    if (state == 1) {  // 1 = 0.222...
      digits.push_back('1');
      continue;
    }
    Rat scaled = 3 * state;
    Int d = scaled.get_num() / scaled.get_den();  // floor; scaled in [0,3)
    Rat rem = scaled - Rat(d);
    if (d == 1) {
      if (rem != 0) return std::nullopt;  // 0.1x... with x != 0 has no {0,2} form
      // 1/3 = 0.1000... = 0.0222...; take the {0,2} branch.
      digits.push_back('0');
      state = 1;
      continue;
    }
    digits.push_back(d == 0 ? '0' : '1');
    state = std::move(rem);
  }
}

CantorPoint mirror0(const CantorPoint& p) { return CantorPoint(1 - p.value()); }

CantorPoint CantorPoint::checked(const Rat& q) {
  if (!unembed(q))
    throw std::invalid_argument("not a Cantor set point: " + rat_to_string(q));
  return CantorPoint(q);
}

std::ostream& operator<<(std::ostream& os, const CantorPoint& p) {
  return os << rat_to_string(p.value());
}

}  // namespace knaster

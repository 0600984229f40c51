#include "knaster/rational.hpp"

#include <stdexcept>

namespace knaster {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int pow3(unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, exp);
  return r;
}

Int pow10(unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exp);
  return r;
}

Rat parse_rat(std::string_view text) {
  std::size_t pos = 0;
  auto take_digits = [&]() {
    std::string out;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out.push_back(text[pos++]);
    return out;
  };
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  std::string num = take_digits();
  if (num.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = take_digits();
    if (den.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rat r = make_rat(Int(num), Int(den));
  return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string rat_to_decimal(const Rat& q, unsigned digits) {
  const bool neg = q < 0;
  const Rat a = abs(q);
  const Int scale = pow10(digits);
  const Int n = a.get_num() * scale;
  const Int& den = a.get_den();
  Int t = n / den;  // operands nonnegative, so this is a floor
  const Int twice = 2 * (n - t * den);
  if (twice > den || (twice == den && mpz_odd_p(t.get_mpz_t()))) t += 1;
  std::string out = (neg && t != 0) ? "-" : "";
  out += Int(t / scale).get_str();
  if (digits > 0) {
    std::string frac = Int(t % scale).get_str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace knaster

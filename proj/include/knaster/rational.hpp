#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace knaster {

using Int = mpz_class;
using Rat = mpq_class;

// p/q reduced to lowest terms. Throws std::invalid_argument if den == 0.
Rat make_rat(const Int& num, const Int& den);

Int pow3(unsigned long exp);
Int pow10(unsigned long exp);

// Accepts "p" or "p/q" with an optional leading '-'.
Rat parse_rat(std::string_view text);

// "p/q" in lowest terms; integers print without the denominator.
std::string rat_to_string(const Rat& q);

// Fixed-point decimal with `digits` fractional places, round half to even.
// The value is computed exactly before rounding.
std::string rat_to_decimal(const Rat& q, unsigned digits);

}  // namespace knaster

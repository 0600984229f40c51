#pragma once

#include <optional>
#include <ostream>

#include "knaster/binseq.hpp"
#include "knaster/rational.hpp"

namespace knaster {

/// An exact rational in [0,1] whose triadic expansion uses only the digits
/// 0 and 2, i.e. a point of the middle-thirds Cantor set.
class CantorPoint {
public:
  const Rat& value() const { return value_; }

  /// Validates membership via unembed; throws std::invalid_argument if q has
  /// no {0,2} triadic expansion.
  static CantorPoint checked(const Rat& q);

  bool operator==(const CantorPoint& o) const { return cmp(value_, o.value_) == 0; }
  bool operator<(const CantorPoint& o) const { return cmp(value_, o.value_) < 0; }

private:
  explicit CantorPoint(Rat v) : value_(std::move(v)) {}
  friend CantorPoint embed(const BinSeq& s);
  friend CantorPoint mirror0(const CantorPoint& p);

  Rat value_;
};

/// Sum of 2*s_i/3^(i+1), computed in closed form from the lasso
/// representation, reduced to lowest terms.
CantorPoint embed(const BinSeq& s);

/// Inverse of embed. nullopt when q is outside [0,1] or no triadic expansion
/// of q avoids the digit 1. At a terminating expansion with digit 1 (such as
/// 1/3 = 0.1000...) the equivalent {0,2} expansion (0.0222...) is chosen.
std::optional<BinSeq> unembed(const Rat& q);

/// 1 - p; the Cantor set's reflection symmetry (digit swap 0 <-> 2).
CantorPoint mirror0(const CantorPoint& p);

std::ostream& operator<<(std::ostream& os, const CantorPoint& p);

}  // namespace knaster

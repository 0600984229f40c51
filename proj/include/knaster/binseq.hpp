#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace knaster {

/// An eventually periodic 0/1 sequence stored as a lasso: a finite prefix word
/// followed by an infinitely repeated period word.
///
/// Instances are always in canonical form: the period is primitive (not a
/// power of a shorter word) and the prefix is as short as possible (its last
/// symbol never matches what rotating the period would place there). With
/// that, structural equality coincides with equality of the represented
/// sequences, so BinSeq works directly as a set/map key.
class BinSeq {
public:
  BinSeq() : period_("0") {}  // the all-zero sequence

  /// Canonicalizing constructor. The period must be nonempty and both words
  /// must be over {0,1}; otherwise std::invalid_argument.
  static BinSeq make(std::string_view prefix, std::string_view period);

  /// Bit at position i of prefix.period^inf.
  int get(std::uint64_t i) const {
    if (i < prefix_.size()) return prefix_[i] - '0';
    return period_[(i - prefix_.size()) % period_.size()] - '0';
  }

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  bool operator==(const BinSeq&) const = default;
  // Container ordering on the canonical representation (not sequence order;
  // for that see lex_compare).
  auto operator<=>(const BinSeq&) const = default;

private:
  BinSeq(std::string prefix, std::string period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {}

  std::string prefix_;
  std::string period_;
};

enum class Mode { Equal, Complement };

/// Minimal level n at which two sequences agree from n on (Equal) or one
/// agrees with the other's complement from n on (Complement).
struct WitnessLevel {
  std::uint32_t n = 0;
  Mode mode = Mode::Equal;
  bool operator==(const WitnessLevel&) const = default;
};

/// Entrywise flip; an involution.
BinSeq complement(const BinSeq& s);

/// 1 + index of the first 1, or nullopt for the all-zero sequence.
std::optional<std::uint32_t> level(const BinSeq& s);

/// Keeps bits at indices <= k-1 and flips the rest, where k = level(s).
/// Level-preserving involution. Throws std::domain_error on the all-zero
/// sequence, which has no level.
BinSeq hat(const BinSeq& s);

/// Index beyond which agreement on one full lcm window of the two periods
/// settles agreement everywhere: max(prefix lengths, n) + lcm(period lengths).
std::uint64_t agreement_bound(const BinSeq& a, const BinSeq& b, std::uint64_t n = 0);

/// a_i == b_i for all i >= n. Decidable via agreement_bound.
bool f_n(const BinSeq& a, const BinSeq& b, std::uint64_t n);

/// Eventual equality.
bool e0(const BinSeq& a, const BinSeq& b);

/// e0(a, b) or e0(a, complement(b)).
bool e0_star(const BinSeq& a, const BinSeq& b);

/// Minimal (n, mode) witnessing e0_star, i.e. 1 + the largest disagreeing
/// index against b or its complement; nullopt iff !e0_star(a, b).
std::optional<WitnessLevel> witness_level(const BinSeq& a, const BinSeq& b);

/// (a_0, 1, a_1, 1, a_2, 1, ...).
BinSeq interleave(const BinSeq& a);

/// Order of the represented sequences: -1, 0 or +1.
int lex_compare(const BinSeq& a, const BinSeq& b);

/// Drops the first k bits.
BinSeq shift(const BinSeq& s, std::uint64_t k);

/// word followed by tail; word must be over {0,1}.
BinSeq prepend(std::string_view word, const BinSeq& tail);

/// First k bits, unrolled into a word.
std::string head(const BinSeq& s, std::uint64_t k);

/// Canonical text form "prefix(period)", e.g. "(0)", "011(0)".
std::ostream& operator<<(std::ostream& os, const BinSeq& s);

}  // namespace knaster

template <>
struct std::hash<knaster::BinSeq> {
  std::size_t operator()(const knaster::BinSeq& s) const noexcept {
    std::size_t h = std::hash<std::string>{}(s.prefix());
    std::size_t g = std::hash<std::string>{}(s.period());
    return h ^ (g + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

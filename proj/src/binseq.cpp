#include "knaster/binseq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knaster {

namespace {

void check_word(std::string_view w, const char* what) {
  for (char c : w) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string(what) + " contains a non-binary symbol");
  }
}

// Shortest d with w = (w[0..d))^(n/d).
std::string primitive_root(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return w.substr(0, d);
  }
  return w;
}

std::string flipped(std::string w) {
  for (char& c : w) c = (c == '0') ? '1' : '0';
  return w;
}

}  // namespace

BinSeq BinSeq::make(std::string_view prefix, std::string_view period) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  check_word(prefix, "prefix");
  check_word(period, "period");
  std::string w = primitive_root(std::string(period));
  std::string p(prefix);
  // Absorb prefix symbols that the rotated period reproduces; rotation keeps
  // the period primitive.
  while (!p.empty() && p.back() == w.back()) {
    p.pop_back();
    w.insert(w.begin(), w.back());
    w.pop_back();
  }
  return BinSeq(std::move(p), std::move(w));
}

BinSeq complement(const BinSeq& s) {
  return BinSeq::make(flipped(s.prefix()), flipped(s.period()));
}

std::optional<std::uint32_t> level(const BinSeq& s) {
  const std::string& p = s.prefix();
  if (auto i = p.find('1'); i != std::string::npos)
    return static_cast<std::uint32_t>(i) + 1;
  const std::string& w = s.period();
  if (auto j = w.find('1'); j != std::string::npos)
    return static_cast<std::uint32_t>(p.size() + j) + 1;
  return std::nullopt;  // all-zero
}

BinSeq hat(const BinSeq& s) {
  auto k = level(s);
  if (!k) throw std::domain_error("hat is undefined on the all-zero sequence");
  return prepend(head(s, *k), complement(shift(s, *k)));
}

std::uint64_t agreement_bound(const BinSeq& a, const BinSeq& b, std::uint64_t n) {
  const std::uint64_t start =
      std::max({static_cast<std::uint64_t>(a.prefix().size()),
                static_cast<std::uint64_t>(b.prefix().size()), n});
  return start + std::lcm<std::uint64_t>(a.period().size(), b.period().size());
}

bool f_n(const BinSeq& a, const BinSeq& b, std::uint64_t n) {
  const std::uint64_t bound = agreement_bound(a, b, n);
  for (std::uint64_t i = n; i < bound; ++i)
    if (a.get(i) != b.get(i)) return false;
  return true;
}

bool e0(const BinSeq& a, const BinSeq& b) { return f_n(a, b, agreement_bound(a, b)); }

bool e0_star(const BinSeq& a, const BinSeq& b) {
  return e0(a, b) || e0(a, complement(b));
}

namespace {

// Minimal n with a F_n b, or nullopt when the sequences are not eventually
// equal. Equals 1 + the largest disagreeing index.
std::optional<std::uint64_t> minimal_equal_level(const BinSeq& a, const BinSeq& b) {
  const std::uint64_t bound = agreement_bound(a, b);
  if (!f_n(a, b, bound)) return std::nullopt;
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < bound; ++i)
    if (a.get(i) != b.get(i)) n = i + 1;
  return n;
}

}  // namespace

std::optional<WitnessLevel> witness_level(const BinSeq& a, const BinSeq& b) {
  auto eq = minimal_equal_level(a, b);
  auto co = minimal_equal_level(a, complement(b));
  // Both modes can never hold at once (b and its complement disagree
  // everywhere), but prefer Equal if they somehow tie.
  if (eq && (!co || *eq <= *co))
    return WitnessLevel{static_cast<std::uint32_t>(*eq), Mode::Equal};
  if (co) return WitnessLevel{static_cast<std::uint32_t>(*co), Mode::Complement};
  return std::nullopt;
}

BinSeq interleave(const BinSeq& a) {
  auto weave = [](const std::string& w) {
    std::string out;
    out.reserve(2 * w.size());
    for (char c : w) {
      out.push_back(c);
      out.push_back('1');
    }
    return out;
  };
  return BinSeq::make(weave(a.prefix()), weave(a.period()));
}

int lex_compare(const BinSeq& a, const BinSeq& b) {
  const std::uint64_t bound = agreement_bound(a, b);
  for (std::uint64_t i = 0; i < bound; ++i) {
    int d = a.get(i) - b.get(i);
    if (d != 0) return d < 0 ? -1 : 1;
  }
  return 0;
}

BinSeq shift(const BinSeq& s, std::uint64_t k) {
  const std::uint64_t plen = s.prefix().size();
  if (k <= plen) return BinSeq::make(s.prefix().substr(k), s.period());
  const std::size_t j = (k - plen) % s.period().size();
  return BinSeq::make("", s.period().substr(j) + s.period().substr(0, j));
}

BinSeq prepend(std::string_view word, const BinSeq& tail) {
  return BinSeq::make(std::string(word) + tail.prefix(), tail.period());
}

std::string head(const BinSeq& s, std::uint64_t k) {
  std::string out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(static_cast<char>('0' + s.get(i)));
  return out;
}

std::ostream& operator<<(std::ostream& os, const BinSeq& s) {
  return os << s.prefix() << '(' << s.period() << ')';
}

}  // namespace knaster

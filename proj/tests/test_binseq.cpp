#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "knaster/binseq.hpp"

#include "test_util.hpp"

using namespace knaster;
using testutil::naive_bit;
using testutil::random_seq;
using testutil::random_word;

TEST_CASE("canonical form is forced by the constructor") {
  CHECK(BinSeq::make("0110", "0") == BinSeq::make("011", "0"));
  CHECK(BinSeq::make("0001", "1") == BinSeq::make("000", "1"));
  CHECK(BinSeq::make("1001", "1") == BinSeq::make("100", "1"));
  CHECK(BinSeq::make("01", "01") == BinSeq::make("", "01"));
  CHECK(BinSeq::make("", "0101") == BinSeq::make("", "01"));
  CHECK(BinSeq::make("", "111") == BinSeq::make("", "1"));
  CHECK(BinSeq() == BinSeq::make("0000", "0"));

  // The whole prefix can dissolve into a rotation of the period.
  CHECK(BinSeq::make("10", "110") == BinSeq::make("", "101"));

  const BinSeq s = BinSeq::make("10", "011");
  CHECK(s.prefix() == "10");
  CHECK(s.period() == "011");
}

TEST_CASE("constructor rejects bad words") {
  CHECK_THROWS_AS(BinSeq::make("01", ""), std::invalid_argument);
  CHECK_THROWS_AS(BinSeq::make("0a", "1"), std::invalid_argument);
  CHECK_THROWS_AS(BinSeq::make("0", "12"), std::invalid_argument);
}

TEST_CASE("get matches direct indexing of the raw spelling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string prefix = random_word(rng, rng() % 12);
    const std::string period = random_word(rng, 1 + rng() % 9);
    const BinSeq s = BinSeq::make(prefix, period);
    for (std::uint64_t i = 0; i < 96; ++i) {
      CAPTURE(prefix); CAPTURE(period); CAPTURE(i);
      CHECK(s.get(i) == naive_bit(prefix, period, i));
    }
  }
}

TEST_CASE("structural equality equals sequence equality") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const BinSeq s = random_seq(rng);
    // Any respelling through an explicit cut point must land on the same
    // canonical object.
    const std::uint64_t cut = rng() % 24;
    CHECK(prepend(head(s, cut), shift(s, cut)) == s);
  }
}

TEST_CASE("complement flips every bit and is an involution") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq s = random_seq(rng);
    const BinSeq c = complement(s);
    for (std::uint64_t i = 0; i < 64; ++i) CHECK(c.get(i) == 1 - s.get(i));
    CHECK(complement(c) == s);
    CHECK(c != s);
  }
}

TEST_CASE("level finds the first 1") {
  CHECK(!level(BinSeq()));
  CHECK(level(BinSeq::make("", "1")) == 1);
  CHECK(level(BinSeq::make("001", "0")) == 3);
  CHECK(level(BinSeq::make("0", "01")) == 3);
  CHECK(level(BinSeq::make("1", "0")) == 1);
}

TEST_CASE("hat keeps the head, flips the tail, preserves the level") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    BinSeq s = random_seq(rng);
    if (!level(s)) s = BinSeq::make("", "1");
    const std::uint32_t k = *level(s);
    const BinSeq h = hat(s);
    for (std::uint64_t i = 0; i < k; ++i) CHECK(h.get(i) == s.get(i));
    for (std::uint64_t i = k; i < k + 64; ++i) CHECK(h.get(i) == 1 - s.get(i));
    CHECK(*level(h) == k);
    CHECK(hat(h) == s);
  }
  CHECK_THROWS_AS(hat(BinSeq()), std::domain_error);
}

TEST_CASE("f_n agrees with a brute-force window") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 400; ++trial) {
    const BinSeq a = random_seq(rng);
    // Mix pairs that share a's tail with independent draws.
    const BinSeq b = trial % 2 ? testutil::related_partner(rng, a) : random_seq(rng);
    const std::uint64_t n = rng() % 24;
    // Prefixes <= 20 and periods <= 8 settle agreement within lcm <= 56 of the
    // starting point, so a 1024-bit window is decisive.
    bool window = true;
    for (std::uint64_t i = n; i < n + 1024 && window; ++i) window = a.get(i) == b.get(i);
    CAPTURE(a); CAPTURE(b); CAPTURE(n);
    CHECK(f_n(a, b, n) == window);
  }
}

TEST_CASE("f_n is monotone in n") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq a = random_seq(rng);
    const BinSeq b = trial % 2 ? testutil::related_partner(rng, a) : random_seq(rng);
    bool seen = false;
    for (std::uint64_t n = 0; n < 40; ++n) {
      const bool now = f_n(a, b, n);
      // Once true it must stay true.
      CHECK(!(seen && !now));
      seen = seen || now;
    }
  }
}

TEST_CASE("e0 and e0star are equivalence relations") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const BinSeq a = random_seq(rng);
    const BinSeq b = trial % 2 ? testutil::related_partner(rng, a) : random_seq(rng);
    const BinSeq c = trial % 3 ? testutil::related_partner(rng, b) : random_seq(rng);
    CHECK(e0(a, a));
    CHECK(e0_star(a, a));
    CHECK(e0(a, b) == e0(b, a));
    CHECK(e0_star(a, b) == e0_star(b, a));
    if (e0(a, b) && e0(b, c)) CHECK(e0(a, c));
    if (e0_star(a, b) && e0_star(b, c)) CHECK(e0_star(a, c));
  }
}

TEST_CASE("e0 and e0star relate exactly the right pairs") {
  const BinSeq a = BinSeq::make("0110", "0");
  const BinSeq b = BinSeq::make("0001", "1");
  CHECK(!e0(a, b));
  CHECK(e0_star(a, b));
  CHECK(e0(a, complement(b)));

  CHECK(e0(BinSeq::make("111", "0"), BinSeq()));
  CHECK(!e0_star(BinSeq::make("", "01"), BinSeq()));
  CHECK(e0_star(BinSeq::make("", "01"), BinSeq::make("", "10")));

  std::mt19937 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    const BinSeq s = random_seq(rng);
    const BinSeq t = testutil::related_partner(rng, s);
    CHECK(e0_star(s, t));
    CHECK(e0(s, t) != e0(s, complement(t)));
  }
}

TEST_CASE("witness_level is minimal and mode-correct") {
  const auto wl = witness_level(BinSeq::make("0110", "0"), BinSeq::make("0001", "1"));
  REQUIRE(wl.has_value());
  CHECK(wl->n == 1);
  CHECK(wl->mode == Mode::Complement);

  CHECK(!witness_level(BinSeq::make("", "01"), BinSeq()));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const BinSeq a = random_seq(rng);
    const BinSeq b = testutil::related_partner(rng, a);
    const auto w = witness_level(a, b);
    REQUIRE(w.has_value());
    const BinSeq target = w->mode == Mode::Equal ? b : complement(b);
    CHECK(f_n(a, target, w->n));
    if (w->n > 0) CHECK(!f_n(a, target, w->n - 1));
  }
}

TEST_CASE("witness_level of equal sequences is level 0, mode equal") {
  const BinSeq s = BinSeq::make("01", "10");
  const auto wl = witness_level(s, s);
  REQUIRE(wl.has_value());
  CHECK(wl->n == 0);
  CHECK(wl->mode == Mode::Equal);
}

TEST_CASE("interleave puts 1 after every symbol") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq s = random_seq(rng);
    const BinSeq f = interleave(s);
    for (std::uint64_t i = 0; i < 48; ++i) {
      CHECK(f.get(2 * i) == s.get(i));
      CHECK(f.get(2 * i + 1) == 1);
    }
  }
}

TEST_CASE("shift, prepend and head compose as expected") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq s = random_seq(rng);
    const std::uint64_t k = rng() % 20;
    const BinSeq tail = shift(s, k);
    for (std::uint64_t i = 0; i < 48; ++i) CHECK(tail.get(i) == s.get(k + i));
    CHECK(head(s, k).size() == k);
    CHECK(prepend(head(s, k), tail) == s);
  }
  CHECK_THROWS_AS(prepend("0x", BinSeq()), std::invalid_argument);
}

TEST_CASE("lex_compare orders by the first disagreeing bit") {
  std::mt19937 rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    const BinSeq a = random_seq(rng);
    const BinSeq b = trial % 2 ? testutil::related_partner(rng, a) : random_seq(rng);
    int expect = 0;
    for (std::uint64_t i = 0; i < 1024; ++i) {
      if (a.get(i) != b.get(i)) {
        expect = a.get(i) < b.get(i) ? -1 : 1;
        break;
      }
    }
    CHECK(lex_compare(a, b) == expect);
    CHECK(lex_compare(b, a) == -expect);
  }
  CHECK(lex_compare(BinSeq(), BinSeq()) == 0);
}

TEST_CASE("agreement_bound really is an agreement bound") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq a = random_seq(rng);
    const BinSeq b = random_seq(rng);
    const std::uint64_t n = rng() % 16;
    const std::uint64_t bound = agreement_bound(a, b, n);
    CHECK(bound >= n);
    bool upto = true;
    for (std::uint64_t i = n; i < bound; ++i) upto = upto && a.get(i) == b.get(i);
    bool beyond = true;
    for (std::uint64_t i = n; i < bound + 2048; ++i) beyond = beyond && a.get(i) == b.get(i);
    CHECK(upto == beyond);
  }
}

TEST_CASE("printing uses the canonical spelling") {
  std::ostringstream out;
  out << BinSeq::make("0110", "0") << " " << BinSeq() << " " << BinSeq::make("", "01");
  CHECK(out.str() == "011(0) (0) (01)");
}

TEST_CASE("hash is consistent with equality") {
  std::mt19937 rng(22);
  const std::hash<BinSeq> h;
  for (int trial = 0; trial < 200; ++trial) {
    const BinSeq s = random_seq(rng);
    const std::uint64_t cut = rng() % 16;
    CHECK(h(prepend(head(s, cut), shift(s, cut))) == h(s));
  }
}

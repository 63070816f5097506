#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "latcc/bitword.hpp"
#include "latcc/errors.hpp"

using latcc::BitWord;

TEST_SUITE("bitword") {

TEST_CASE("parse and str round-trip, first character is coordinate 0") {
  const BitWord w = BitWord::parse("1010");
  CHECK(w.length() == 4);
  CHECK(w.bit(0));
  CHECK_FALSE(w.bit(1));
  CHECK(w.bit(2));
  CHECK_FALSE(w.bit(3));
  CHECK(w.str() == "1010");
  CHECK(BitWord::parse("").length() == 0);
}

TEST_CASE("multi-limb words work across the 64-bit boundary") {
  BitWord w(72);
  CHECK(w.is_zero());
  w.set_bit(0, true);
  w.set_bit(63, true);
  w.set_bit(64, true);
  w.set_bit(71, true);
  CHECK(w.weight() == 4);
  CHECK(w.bit(63));
  CHECK(w.bit(64));
  const BitWord back = BitWord::parse(w.str());
  CHECK(back == w);
  CHECK(w.slice(60, 8).str() == "00011000");
}

TEST_CASE("unit_sum and ones") {
  CHECK(BitWord::unit_sum(5, {0, 3}).str() == "10010");
  CHECK(BitWord::unit_sum(5, {}).is_zero());
  CHECK(BitWord::ones(70).weight() == 70);
  CHECK(BitWord::ones(3).str() == "111");
}

TEST_CASE("xor and schur laws") {
  const BitWord a = BitWord::parse("1100110");
  const BitWord b = BitWord::parse("1010101");
  CHECK(((a ^ b) ^ b) == a);
  CHECK(schur(a, b) == schur(b, a));
  CHECK(schur(a, a) == a);
  // Schur distributes over xor coordinatewise.
  const BitWord c = BitWord::parse("0110011");
  CHECK(schur(a, b ^ c) == (schur(a, b) ^ schur(a, c)));
  CHECK_THROWS_AS((void)(a ^ BitWord::parse("10")), latcc::DimensionError);
  CHECK_THROWS_AS((void)schur(a, BitWord::parse("10")), latcc::DimensionError);
}

TEST_CASE("weight and parity") {
  CHECK(BitWord::parse("1011").weight() == 3);
  CHECK(BitWord::parse("1011").parity());
  CHECK_FALSE(BitWord::parse("1001").parity());
  CHECK(BitWord(10).weight() == 0);
}

TEST_CASE("ordering is lexicographic by coordinate") {
  std::vector<BitWord> words = {BitWord::parse("10"), BitWord::parse("01"), BitWord::parse("11"),
                                BitWord::parse("00")};
  std::sort(words.begin(), words.end());
  CHECK(words[0].str() == "00");
  CHECK(words[1].str() == "01");
  CHECK(words[2].str() == "10");
  CHECK(words[3].str() == "11");
  // A multi-limb pair differing only past bit 63.
  BitWord lo(72), hi(72);
  hi.set_bit(70, true);
  CHECK(lo < hi);
}

TEST_CASE("concat and slice invert each other") {
  const BitWord a = BitWord::parse("110");
  const BitWord b = BitWord::parse("011");
  const BitWord c = BitWord::parse("101");
  const BitWord cat = BitWord::concat(std::vector<BitWord>{a, b, c});
  CHECK(cat.str() == "110011101");
  CHECK(cat.slice(0, 3) == a);
  CHECK(cat.slice(3, 3) == b);
  CHECK(cat.slice(6, 3) == c);
}

TEST_CASE("out-of-range bit access throws") {
  BitWord w(5);
  CHECK_THROWS_AS((void)w.bit(5), latcc::Error);
  CHECK_THROWS_AS(w.set_bit(-1, true), latcc::Error);
}

TEST_CASE("binary addition identity x + y = (x xor y) + 2 (x and y)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    BitWord x(40), y(40);
    for (int j = 0; j < 40; ++j) {
      x.set_bit(j, (rng() & 1) != 0);
      y.set_bit(j, (rng() & 1) != 0);
    }
    const BitWord xo = x ^ y;
    const BitWord an = schur(x, y);
    for (int j = 0; j < 40; ++j) {
      const int lhs = static_cast<int>(x.bit(j)) + static_cast<int>(y.bit(j));
      const int rhs = static_cast<int>(xo.bit(j)) + 2 * static_cast<int>(an.bit(j));
      CHECK(lhs == rhs);
    }
  }
}

}  // TEST_SUITE

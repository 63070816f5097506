#include <set>

#include "doctest.h"
#include "latcc/code_library.hpp"
#include "latcc/errors.hpp"
#include "latcc/linear_code.hpp"

using latcc::BitWord;
using latcc::LinearCode;

TEST_SUITE("linear_code") {

TEST_CASE("rref reduces, ranks and orders pivots") {
  const auto r = latcc::rref({BitWord::parse("1100"), BitWord::parse("0110"),
                              BitWord::parse("1010"), BitWord::parse("0001")});
  CHECK(r.rank == 3);  // third row is the sum of the first two
  REQUIRE(r.rows.size() == 3);
  REQUIRE(r.pivots.size() == 3);
  for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
  // Reduced: every pivot column is zero in all other rows.
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t j = 0; j < r.rows.size(); ++j)
      if (i != j) CHECK_FALSE(r.rows[j].bit(r.pivots[i]));
}

TEST_CASE("construction from dependent generators") {
  const LinearCode c(4, {BitWord::parse("1001"), BitWord::parse("0011"), BitWord::parse("1010")});
  CHECK(c.rank() == 2);
  CHECK(c.size() == 4);
  CHECK(c.contains(BitWord::parse("1001")));
  CHECK(c.contains(BitWord::parse("1010")));
  CHECK(c.contains(BitWord::parse("0000")));
  CHECK_FALSE(c.contains(BitWord::parse("1000")));
}

TEST_CASE("zero and full codes") {
  const LinearCode z(3);
  CHECK(z.rank() == 0);
  CHECK(z.size() == 1);
  CHECK(z.contains(BitWord(3)));
  CHECK_FALSE(z.contains(BitWord::parse("100")));
  const LinearCode f = LinearCode::full(3);
  CHECK(f.rank() == 3);
  CHECK(f.size() == 8);
  CHECK(f.contains(BitWord::parse("101")));
  CHECK_THROWS_AS(LinearCode(0), latcc::Error);
}

TEST_CASE("from_word_list accepts exactly a linear code") {
  const LinearCode c = LinearCode::from_word_list(
      4, {BitWord::parse("0000"), BitWord::parse("1001"), BitWord::parse("1010"),
          BitWord::parse("0011")});
  CHECK(c.rank() == 2);
  SUBCASE("a non-closed list is rejected with the missing word") {
    try {
      (void)LinearCode::from_word_list(
          4, {BitWord::parse("0000"), BitWord::parse("0001"), BitWord::parse("0010")});
      FAIL("expected NotLinearError");
    } catch (const latcc::NotLinearError& e) {
      CHECK(e.offending_word == "0011");
      CHECK(std::string(e.what()).find("0011") != std::string::npos);
    }
  }
  SUBCASE("a list that is a strict subset of its span is rejected") {
    // {0000, 1001, 1010} spans a rank-2 code with 4 words.
    CHECK_THROWS_AS((void)LinearCode::from_word_list(4, {BitWord::parse("0000"),
                                                         BitWord::parse("1001"),
                                                         BitWord::parse("1010")}),
                    latcc::NotLinearError);
  }
  SUBCASE("the empty list is rejected") {
    CHECK_THROWS_AS((void)LinearCode::from_word_list(4, {}), latcc::NotLinearError);
  }
  SUBCASE("duplicates are rejected") {
    CHECK_THROWS_AS((void)LinearCode::from_word_list(2, {BitWord::parse("00"),
                                                         BitWord::parse("00")}),
                    latcc::NotLinearError);
  }
}

TEST_CASE("codeword enumeration visits each word exactly once") {
  const LinearCode c(5, {BitWord::parse("11000"), BitWord::parse("00110"),
                         BitWord::parse("00011")});
  std::set<std::string> seen;
  c.for_each_codeword([&](const BitWord& w) { seen.insert(w.str()); });
  CHECK(seen.size() == c.size());
  for (const auto& s : seen) CHECK(c.contains(BitWord::parse(s)));
  const auto sorted = c.codewords();
  CHECK(sorted.size() == c.size());
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST_CASE("enumeration cap") {
  const LinearCode big = LinearCode::full(30);
  CHECK_THROWS_AS((void)big.codewords(1 << 20), latcc::EnumerationCapError);
  CHECK_THROWS_AS((void)big.min_weight(1 << 20), latcc::EnumerationCapError);
}

TEST_CASE("containment order") {
  const LinearCode sub(4, {BitWord::parse("1111")});
  const LinearCode mid = latcc::even_parity_code(4);
  const LinearCode full = LinearCode::full(4);
  CHECK(mid.contains(sub));
  CHECK(full.contains(mid));
  CHECK_FALSE(sub.contains(mid));
  CHECK(full.contains(full));
}

TEST_CASE("weight distribution and min weight") {
  const auto dist = latcc::even_parity_code(4).weight_distribution();
  REQUIRE(dist.size() == 3);
  CHECK(dist.at(0) == 1);
  CHECK(dist.at(2) == 6);
  CHECK(dist.at(4) == 1);
  CHECK(latcc::even_parity_code(4).min_weight() == 2);
  CHECK_THROWS_AS((void)LinearCode(3).min_weight(), latcc::Error);
}

TEST_CASE("equality is equality of the spanned code") {
  const LinearCode a(3, {BitWord::parse("110"), BitWord::parse("011")});
  const LinearCode b(3, {BitWord::parse("101"), BitWord::parse("011")});
  CHECK(a == b);
  const LinearCode c(3, {BitWord::parse("110")});
  CHECK(a != c);
}

TEST_CASE("mixed generator lengths are rejected") {
  CHECK_THROWS_AS(LinearCode(3, {BitWord::parse("110"), BitWord::parse("0110")}),
                  latcc::DimensionError);
}

}  // TEST_SUITE

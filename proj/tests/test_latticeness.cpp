#include <random>

#include "doctest.h"
#include "latcc/code_file.hpp"
#include "latcc/code_library.hpp"
#include "latcc/constructions.hpp"
#include "latcc/errors.hpp"
#include "latcc/latticeness.hpp"

using latcc::BitWord;
using latcc::CheckMethod;
using latcc::Constellation;
using latcc::Decomposition;
using latcc::LatticeVerdict;
using latcc::LayeredCode;
using latcc::LinearCode;
using latcc::PairWitness;
using latcc::Point;
using latcc::SchurWitness;

namespace {

Decomposition decompose(const Point& p, int n, int L) {
  Decomposition d;
  for (int i = 0; i < L; ++i) {
    BitWord b(n);
    for (int j = 0; j < n; ++j) b.set_bit(j, (p[static_cast<std::size_t>(j)] >> i) & 1);
    d.blocks.push_back(std::move(b));
  }
  for (int j = 0; j < n; ++j)
    d.translate.push_back(p[static_cast<std::size_t>(j)] >> L);
  return d;
}

LayeredCode random_layered(std::mt19937& rng, int n, int L, int rank_target) {
  std::vector<BitWord> gens;
  for (int r = 0; r < rank_target; ++r) {
    BitWord g(n * L);
    for (int b = 0; b < n * L; ++b)
      if (rng() & 1u) g.set_bit(b, true);
    gens.push_back(std::move(g));
  }
  return LayeredCode(LinearCode(n * L, std::move(gens)), n, L);
}

}  // namespace

TEST_SUITE("latticeness") {

TEST_CASE("carry rows for 3 + 5") {
  const std::vector<BitWord> a = {BitWord::parse("1"), BitWord::parse("1"), BitWord::parse("0")};
  const std::vector<BitWord> b = {BitWord::parse("1"), BitWord::parse("0"), BitWord::parse("1")};
  const latcc::CarryState st = latcc::carry_state(a, b);
  REQUIRE(st.s.size() == 3);
  CHECK(st.s[0].str() == "1");
  CHECK(st.s[1].str() == "1");
  CHECK(st.s[2].str() == "1");
  REQUIRE(st.r[1].size() == 1);
  CHECK(st.r[1][0].str() == "1");
  REQUIRE(st.r[2].size() == 2);
  CHECK(st.r[2][0].str() == "0");
  CHECK(st.r[2][1].str() == "1");

  Decomposition da{a, {0}};
  Decomposition db{b, {0}};
  const Decomposition sum = latcc::carry_sum(da, db);
  CHECK(sum.reconstruct() == Point{8});
  for (const BitWord& blk : sum.blocks) CHECK(blk.weight() == 0);
  CHECK(sum.translate == std::vector<std::int64_t>{1});
}

TEST_CASE("carry sum equals integer addition exhaustively in one coordinate") {
  for (int L = 1; L <= 3; ++L) {
    const std::int64_t period = std::int64_t{1} << L;
    for (std::int64_t x = 0; x < period; ++x) {
      for (std::int64_t y = 0; y < period; ++y) {
        for (std::int64_t tx = -1; tx <= 1; ++tx) {
          for (std::int64_t ty = -1; ty <= 1; ++ty) {
            const Decomposition a = decompose({x + tx * period}, 1, L);
            const Decomposition b = decompose({y + ty * period}, 1, L);
            CHECK(latcc::carry_sum(a, b).reconstruct() ==
                  Point{x + tx * period + y + ty * period});
          }
        }
      }
    }
  }
}

TEST_CASE("carry sum equals integer addition on random vectors") {
  std::mt19937 rng(2024);
  const int n = 8, L = 4;
  std::uniform_int_distribution<std::int64_t> coord(-64, 63);
  for (int trial = 0; trial < 1000; ++trial) {
    Point p(n), q(n), expect(n);
    for (int j = 0; j < n; ++j) {
      p[static_cast<std::size_t>(j)] = coord(rng);
      q[static_cast<std::size_t>(j)] = coord(rng);
      expect[static_cast<std::size_t>(j)] =
          p[static_cast<std::size_t>(j)] + q[static_cast<std::size_t>(j)];
    }
    const Decomposition a = decompose(p, n, L);
    const Decomposition b = decompose(q, n, L);
    CHECK(latcc::carry_sum(a, b).reconstruct() == expect);
  }
}

TEST_CASE("carry sum dimension errors") {
  Decomposition a{{BitWord::parse("10")}, {0, 0}};
  Decomposition b{{BitWord::parse("10"), BitWord::parse("01")}, {0, 0}};
  CHECK_THROWS_AS((void)latcc::carry_sum(a, b), latcc::DimensionError);
  Decomposition c{{}, {}};
  CHECK_THROWS_AS((void)latcc::carry_sum(c, c), latcc::DimensionError);
}

TEST_CASE("closure check pins the first failing pair") {
  const LatticeVerdict v =
      latcc::closure_check(latcc::construction_c_star(latcc::builtin_code("ex1")));
  CHECK(v.method == CheckMethod::brute_force);
  CHECK(v.is_lattice == false);
  REQUIRE(v.witness.has_value());
  REQUIRE(std::holds_alternative<PairWitness>(*v.witness));
  const auto& w = std::get<PairWitness>(*v.witness);
  CHECK(w.a == Point{1, 2});
  CHECK(w.b == Point{3, 0});
}

TEST_CASE("closure check reaches doubled points") {
  const Constellation k = Constellation::explicit_set(
      2, 2, latcc::ConstellationSource::construction_c_star, {{0, 0}, {1, 0}});
  const LatticeVerdict v = latcc::closure_check(k);
  CHECK(v.is_lattice == false);
  REQUIRE(v.witness.has_value());
  REQUIRE(std::holds_alternative<PairWitness>(*v.witness));
  const auto& w = std::get<PairWitness>(*v.witness);
  CHECK(w.a == Point{1, 0});
  CHECK(w.b == Point{1, 0});
  CHECK_THROWS_AS(
      (void)latcc::closure_check(Constellation::implicit_layered(
          latcc::ConstellationSource::construction_c_star, latcc::builtin_code("ex1"))),
      latcc::StructureError);
}

TEST_CASE("independent-level closure criterion") {
  const LatticeVerdict good =
      latcc::nested_closure_check({latcc::repetition_code(4), latcc::even_parity_code(4)});
  CHECK(good.method == CheckMethod::nested_closure);
  CHECK(good.precondition_held == true);
  CHECK(good.is_lattice == true);

  const LatticeVerdict bad = latcc::nested_closure_check(
      {LinearCode(4, {BitWord::parse("1100"), BitWord::parse("0110")}),
       latcc::even_parity_code(4)});
  CHECK(bad.precondition_held == true);
  CHECK(bad.is_lattice == false);
  REQUIRE(bad.witness.has_value());
  REQUIRE(std::holds_alternative<SchurWitness>(*bad.witness));
  const auto& w = std::get<SchurWitness>(*bad.witness);
  CHECK(w.target_level == 2);
  CHECK_FALSE(latcc::even_parity_code(4).contains(latcc::schur(w.g, w.h)));

  const LatticeVerdict no_claim =
      latcc::nested_closure_check({LinearCode::full(2), latcc::repetition_code(2)});
  CHECK(no_claim.precondition_held == false);
  CHECK_FALSE(no_claim.is_lattice.has_value());
}

TEST_CASE("structural verdicts on the worked examples") {
  const LatticeVerdict v2 = latcc::structural_check(latcc::builtin_code("ex2"));
  CHECK(v2.method == CheckMethod::structural);
  CHECK(v2.precondition_held == true);
  CHECK(v2.is_lattice == true);

  const LatticeVerdict v1 = latcc::structural_check(latcc::builtin_code("ex1"));
  CHECK(v1.precondition_held == false);
  CHECK_FALSE(v1.is_lattice.has_value());

  const LatticeVerdict v5 = latcc::structural_check(latcc::builtin_code("ex5"));
  CHECK(v5.precondition_held == false);
  CHECK_FALSE(v5.is_lattice.has_value());
}

TEST_CASE("structural refutation with witness, cross-checked by enumeration") {
  const LayeredCode code(
      LinearCode(6, {BitWord::parse("110000"), BitWord::parse("011000"),
                     BitWord::parse("000110"), BitWord::parse("000011")}),
      3, 2);
  const LatticeVerdict v = latcc::structural_check(code);
  CHECK(v.precondition_held == true);
  CHECK(v.is_lattice == false);
  REQUIRE(v.witness.has_value());
  REQUIRE(std::holds_alternative<SchurWitness>(*v.witness));
  const auto& w = std::get<SchurWitness>(*v.witness);
  CHECK(w.target_level == 2);
  CHECK(code.projection(1).contains(w.g));
  CHECK(code.projection(1).contains(w.h));
  CHECK_FALSE(code.antiprojection_zero(2).contains(latcc::schur(w.g, w.h)));

  const Constellation k = latcc::construction_c_star(code);
  CHECK(latcc::closure_check(k).is_lattice == false);
  CHECK_FALSE(k.contains({1, 2, 1}));  // the sum the witness pair fails to cover
}

TEST_CASE("three-level structural refutation matches enumeration") {
  // Levels 2 and 3 each absorb their own products, but the level-1 pair
  // product only appears with a nonzero level-3 tail, so closure fails.
  const LayeredCode code(
      LinearCode(12, {BitWord::parse("110000000000"), BitWord::parse("011000000000"),
                      BitWord::parse("000011000000"), BitWord::parse("000001100000"),
                      BitWord::parse("000000001100"), BitWord::parse("000000000110"),
                      BitWord::parse("000000000100"), BitWord::parse("000001000001")}),
      4, 3);
  const LatticeVerdict v = latcc::structural_check(code);
  CHECK(v.precondition_held == true);
  CHECK(v.is_lattice == false);
  REQUIRE(v.witness.has_value());
  CHECK(std::get<SchurWitness>(*v.witness).target_level == 2);
  CHECK(latcc::closure_check(latcc::construction_c_star(code)).is_lattice == false);
}

TEST_CASE("decide_latticeness picks a decisive route") {
  const LatticeVerdict v2 = latcc::decide_latticeness(latcc::builtin_code("ex2"));
  CHECK(v2.method == CheckMethod::structural);
  CHECK(v2.is_lattice == true);

  const LatticeVerdict v1 = latcc::decide_latticeness(latcc::builtin_code("ex1"));
  CHECK(v1.method == CheckMethod::brute_force);
  CHECK(v1.precondition_held == false);
  CHECK(v1.is_lattice == false);

  const LatticeVerdict v5 = latcc::decide_latticeness(latcc::builtin_code("ex5"));
  CHECK(v5.method == CheckMethod::brute_force);
  CHECK(v5.is_lattice == true);

  const LatticeVerdict capped = latcc::decide_latticeness(latcc::builtin_code("ex5"), 4);
  CHECK(capped.method == CheckMethod::undecided);
  CHECK(capped.precondition_held == false);
  CHECK_FALSE(capped.is_lattice.has_value());
}

TEST_CASE("independent-level verdict is gated on a certified joint lattice") {
  const LatticeVerdict v = latcc::associated_check(latcc::builtin_code("ex2"));
  CHECK(v.method == CheckMethod::nested_closure);
  CHECK(v.is_lattice == true);
  CHECK_THROWS_AS((void)latcc::associated_check(latcc::builtin_code("ex1")),
                  latcc::StructureError);
  const LatticeVerdict leech = latcc::associated_check(latcc::builtin_code("leech"));
  CHECK(leech.is_lattice == true);
}

TEST_CASE("structural criterion agrees with enumeration on random codes") {
  std::mt19937 rng(777);
  int decided = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3u);
    const int L = 2 + static_cast<int>(rng() % 2u);
    const int rank_target = 1 + static_cast<int>(rng() % 6u);
    const LayeredCode code = random_layered(rng, n, L, rank_target);
    const LatticeVerdict structural = latcc::structural_check(code);
    if (!structural.precondition_held.value_or(false)) continue;
    const LatticeVerdict oracle = latcc::closure_check(latcc::construction_c_star(code));
    REQUIRE(structural.is_lattice.has_value());
    CHECK(structural.is_lattice == oracle.is_lattice);
    ++decided;
  }
  CHECK(decided > 20);  // the sample genuinely exercises the criterion
}

TEST_CASE("decide_latticeness agrees with enumeration on random codes") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2u);
    const int L = 2 + static_cast<int>(rng() % 2u);
    const int rank_target = 1 + static_cast<int>(rng() % 5u);
    const LayeredCode code = random_layered(rng, n, L, rank_target);
    const LatticeVerdict v = latcc::decide_latticeness(code);
    const LatticeVerdict oracle = latcc::closure_check(latcc::construction_c_star(code));
    REQUIRE(v.is_lattice.has_value());
    CHECK(v.is_lattice == oracle.is_lattice);
  }
}

TEST_CASE("method names are stable") {
  CHECK(std::string(latcc::method_name(CheckMethod::structural)) == "theorem2");
  CHECK(std::string(latcc::method_name(CheckMethod::nested_closure)) == "theorem1");
  CHECK(std::string(latcc::method_name(CheckMethod::brute_force)) == "bruteforce");
  CHECK(std::string(latcc::method_name(CheckMethod::undecided)) == "undecided");
}

}  // TEST_SUITE

#include "latcc/leech.hpp"

#include "latcc/code_library.hpp"
#include "latcc/constellation.hpp"

namespace latcc {

LayeredCode build_leech_layered_code() {
  const BitWord zero(24);
  const LinearCode golay = golay24();
  std::vector<BitWord> rows;
  rows.push_back(concat_blocks({BitWord::ones(24), zero, BitWord::unit_sum(24, {0})}));
  for (const BitWord& g : golay.basis()) rows.push_back(concat_blocks({zero, g, zero}));
  for (int i = 0; i + 1 < 24; ++i)
    rows.push_back(concat_blocks({zero, zero, BitWord::unit_sum(24, {i, i + 1})}));
  return LayeredCode(LinearCode(72, std::move(rows)), 24, 3);
}

namespace {

SchurCheck schur_closure(const LinearCode& from, const LinearCode& into, int level) {
  SchurCheck chk;
  chk.level = level;
  chk.pass = true;
  const auto& basis = from.basis();
  for (std::size_t a = 0; a < basis.size() && chk.pass; ++a) {
    for (std::size_t b = a; b < basis.size() && chk.pass; ++b) {
      if (!into.contains(schur(basis[a], basis[b]))) {
        chk.pass = false;
        chk.counterexample = SchurWitness{level, basis[a], basis[b]};
      }
    }
  }
  return chk;
}

}  // namespace

LeechReport leech_verify() {
  LeechReport rep;
  const LayeredCode code = build_leech_layered_code();
  const LinearCode c1 = code.projection(1);
  const LinearCode c2 = code.projection(2);
  const LinearCode c3 = code.projection(3);
  const LinearCode s2 = code.antiprojection_zero(2);
  const LinearCode s3 = code.antiprojection_zero(3);

  rep.chain_checks.push_back({"C1 <= S2(0)", s2.contains(c1)});
  rep.chain_checks.push_back({"S2(0) <= C2", c2.contains(s2)});
  rep.chain_checks.push_back({"C2 <= S3(0)", s3.contains(c2)});
  rep.chain_checks.push_back({"S3(0) <= C3", c3.contains(s3)});

  // The all-ones word joins the Golay code because every parity check hits it
  // an even number of times.
  const BitWord ones = BitWord::ones(24);
  bool hcheck = true;
  for (const BitWord& h : golay24_parity_checks())
    if (schur(h, ones).parity()) hcheck = false;
  rep.chain_checks.push_back({"1^24 in C2 (H * 1 = 0)", hcheck && c2.contains(ones)});

  // Even generator weights force every Golay coordinate sum even, which is
  // the membership rule of the even-parity code.
  bool even = true;
  for (const BitWord& g : c2.basis())
    if (g.weight() % 2 != 0) even = false;
  rep.chain_checks.push_back({"C2 generators have even weight", even});

  rep.schur_checks.push_back(schur_closure(c1, s2, 2));
  rep.schur_checks.push_back(schur_closure(c2, s3, 3));

  rep.structural = structural_check(code);

  rep.min_norm = leech_min_norm(code);
  rep.density = packing_density(
      Constellation::implicit_layered(ConstellationSource::construction_c_star, code),
      rep.min_norm.norm_sq);

  rep.associated_min_norm = leech_associated_min_norm(code);
  rep.associated_density = packing_density(
      Constellation::implicit_factors(ConstellationSource::associated_c, {c1, c2, c3}),
      rep.associated_min_norm.norm_sq);

  const BitWord zero(24);
  const BitWord e1 = BitWord::unit_sum(24, {0});
  rep.separation_witnessed = c1.contains(zero) && c2.contains(zero) && c3.contains(e1) &&
                             !code.contains_blocks({zero, zero, e1});

  bool all = rep.structural.is_lattice.value_or(false);
  for (const auto& c : rep.chain_checks) all = all && c.pass;
  for (const auto& c : rep.schur_checks) all = all && c.pass;
  rep.verdict = all;
  return rep;
}

}  // namespace latcc

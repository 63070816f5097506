#include "latcc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "latcc/code_library.hpp"
#include "latcc/errors.hpp"

namespace latcc {

Point min_representative(const Point& p, int levels) {
  const std::int64_t period = std::int64_t{1} << levels;
  Point out = reduce_mod_period(p, levels);
  for (std::int64_t& c : out)
    if (c > period / 2) c -= period;  // the tie at period/2 stays positive
  return out;
}

std::int64_t norm_sq(const Point& p) {
  std::int64_t s = 0;
  for (std::int64_t c : p) s += c * c;
  return s;
}

MinDistance min_distance_sq(const Constellation& k) {
  if (!k.is_explicit())
    throw StructureError("min_distance_sq needs an explicit constellation");
  const auto& cosets = k.cosets();
  const int L = k.levels();
  const std::int64_t period = std::int64_t{1} << L;

  MinDistance best;
  best.d2 = period * period;  // nearest pure translate of any single point
  best.a = cosets.front();
  best.b = cosets.front();
  best.b[0] += period;

  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      Point diff(cosets[i].size());
      for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = cosets[i][m] - cosets[j][m];
      std::int64_t d2 = norm_sq(min_representative(diff, L));
      if (d2 < best.d2) {
        best.d2 = d2;
        best.a = cosets[i];
        best.b = cosets[j];
      }
    }
  }
  return best;
}

double ball_volume(int n) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

namespace {

double ipow(double base, int exp) {
  double out = 1.0;
  double acc = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) out *= acc;
    acc *= acc;
  }
  return out;
}

// center density d2^{n/2} * M / 2^{n(L+1)} as a reduced exact fraction, for
// even n when the odd parts fit in 64 bits. Powers of two are cancelled
// symbolically so Leech-sized exponents cannot overflow.
bool exact_center_fraction(std::int64_t d2, int n, int L, std::uint64_t m,
                           std::uint64_t& num, std::uint64_t& den) {
  if (n % 2 != 0 || d2 <= 0 || m == 0) return false;
  std::uint64_t odd_d = static_cast<std::uint64_t>(d2);
  std::int64_t two_exp = 0;
  while ((odd_d & 1) == 0) {
    odd_d >>= 1;
    ++two_exp;
  }
  std::uint64_t odd_m = m;
  std::int64_t m_exp = 0;
  while ((odd_m & 1) == 0) {
    odd_m >>= 1;
    ++m_exp;
  }
  unsigned __int128 odd = 1;
  for (int i = 0; i < n / 2; ++i) {
    odd *= odd_d;
    if (odd > (static_cast<unsigned __int128>(1) << 62)) return false;
  }
  odd *= odd_m;
  if (odd > (static_cast<unsigned __int128>(1) << 62)) return false;

  std::int64_t net2 = two_exp * (n / 2) + m_exp - static_cast<std::int64_t>(n) * (L + 1);
  if (net2 > 62 || net2 < -62) return false;
  if (net2 >= 0) {
    unsigned __int128 full = odd << net2;
    if (full > (static_cast<unsigned __int128>(1) << 62)) return false;
    num = static_cast<std::uint64_t>(full);
    den = 1;
  } else {
    num = static_cast<std::uint64_t>(odd);
    den = std::uint64_t{1} << (-net2);
  }
  return true;
}

}  // namespace

DensityReport packing_density(const Constellation& k, std::int64_t d2) {
  DensityReport r;
  r.dimension = k.dimension();
  r.levels = k.levels();
  r.points_per_period = k.points_per_period();
  r.min_distance_sq = d2;

  const int n = r.dimension;
  const int L = r.levels;
  if (exact_center_fraction(d2, n, L, r.points_per_period, r.center_num, r.center_den)) {
    r.center_density = static_cast<double>(r.center_num) / static_cast<double>(r.center_den);
  } else {
    const double q = static_cast<double>(d2) / 4.0;
    double c = ipow(q, n / 2);
    if (n % 2) c *= std::sqrt(q);
    c *= static_cast<double>(r.points_per_period);
    r.center_density = std::ldexp(c, -n * L);
    r.center_num = 0;
    r.center_den = 0;
  }
  r.packing_density = r.center_density * ball_volume(n);
  return r;
}

DensityReport packing_density(const Constellation& k) {
  return packing_density(k, min_distance_sq(k).d2);
}

namespace {

void validate_leech_structure(const LayeredCode& code) {
  const auto fail = [](const char* what) {
    throw StructureError(std::string("not the Leech layered code: ") + what);
  };
  if (code.block_length() != 24 || code.levels() != 3) fail("need n=24, L=3");
  if (code.code().rank() != 36) fail("rank must be 36");
  if (!(code.projection(1) == repetition_code(24))) fail("level-1 projection");
  if (!(code.projection(2) == golay24())) fail("level-2 projection");
  if (!(code.projection(3) == LinearCode::full(24))) fail("level-3 projection");
  if (!(code.antiprojection_zero(2) == golay24())) fail("level-2 antiprojection");
  if (!(code.antiprojection_zero(3) == even_parity_code(24))) fail("level-3 antiprojection");
  // With the anti/projections fixed, this one membership pins the coupling:
  // the code contains the span of all 36 expected generators, and rank 36
  // makes that an equality.
  std::vector<BitWord> mixed = {BitWord::ones(24), BitWord(24), BitWord::unit_sum(24, {0})};
  if (!code.contains_blocks(mixed)) fail("parity coupling row");
}

constexpr int kResidue[8] = {0, 1, 2, 3, 4, 3, 2, 1};  // |v| after mod-8 reduction

Decomposition build_leech_witness(int c1bit, const BitWord& c2, const BitWord& c3) {
  Decomposition d;
  d.blocks = {c1bit ? BitWord::ones(24) : BitWord(24), c2, c3};
  d.translate = Point(24, 0);
  for (int j = 0; j < 24; ++j) {
    int v = c1bit + 2 * c2.bit(j) + 4 * c3.bit(j);
    if (v > 4) d.translate[static_cast<std::size_t>(j)] = -1;  // v - 8 is the short residue
  }
  return d;
}

struct BranchOpt {
  std::int64_t cost = 0;
  BitWord c3;
};

BranchOpt branch_optimum(int c1bit, const BitWord& c2, bool parity_coupled) {
  std::int64_t basecost = 0;
  int pen[24];
  bool choice[24];
  int par = 0;
  for (int j = 0; j < 24; ++j) {
    const int u = c1bit + 2 * c2.bit(j);
    const int cost0 = kResidue[u] * kResidue[u];
    const int cost1 = kResidue[u + 4] * kResidue[u + 4];
    if (cost1 < cost0) {
      basecost += cost1;
      pen[j] = cost0 - cost1;
      choice[j] = true;
      par ^= 1;
    } else {
      basecost += cost0;
      pen[j] = cost1 - cost0;
      choice[j] = false;
    }
  }

  int flip_a = -1, flip_b = -1;
  std::int64_t cost;
  if (c1bit == 0 && c2.is_zero()) {
    // The free optimum is the zero point, which does not count. The cheapest
    // nonzero option flips one coordinate (or two, when parity must stay
    // even); the pure translate at 64 is the only other shape and never wins
    // here (each flip costs exactly 16), but the bound is kept explicit.
    int first = -1, second = -1;
    for (int j = 0; j < 24; ++j) {
      if (first < 0 || pen[j] < pen[first]) {
        second = first;
        first = j;
      } else if (second < 0 || pen[j] < pen[second]) {
        second = j;
      }
    }
    if (parity_coupled) {
      cost = basecost + pen[first] + pen[second];
      flip_a = first;
      flip_b = second;
    } else {
      cost = basecost + pen[first];
      flip_a = first;
    }
    if (cost > 64) cost = 64;  // fall back to the pure translate 8 e_1
  } else {
    cost = basecost;
    if (parity_coupled && par != c1bit) {
      int jmin = 0;
      for (int j = 1; j < 24; ++j)
        if (pen[j] < pen[jmin]) jmin = j;
      cost += pen[jmin];
      flip_a = jmin;
    }
  }

  BranchOpt out;
  out.cost = cost;
  out.c3 = BitWord(24);
  for (int j = 0; j < 24; ++j) out.c3.set_bit(j, choice[j]);
  if (flip_a >= 0) out.c3.set_bit(flip_a, !out.c3.bit(flip_a));
  if (flip_b >= 0) out.c3.set_bit(flip_b, !out.c3.bit(flip_b));
  return out;
}

LeechMinNorm leech_branch_search(const LayeredCode& code, bool parity_coupled) {
  validate_leech_structure(code);
  const LinearCode golay = code.projection(2);

  LeechMinNorm best;
  best.norm_sq = 64;  // zero coset, nearest pure translate
  best.witness.blocks = {BitWord(24), BitWord(24), BitWord(24)};
  best.witness.translate = Point(24, 0);
  best.witness.translate[0] = 1;

  for (int c1bit = 0; c1bit <= 1; ++c1bit) {
    golay.for_each_codeword([&](const BitWord& c2) {
      const BranchOpt opt = branch_optimum(c1bit, c2, parity_coupled);
      if (opt.cost < best.norm_sq) {
        best.norm_sq = opt.cost;
        best.witness = build_leech_witness(c1bit, c2, opt.c3);
      }
    });
  }
  return best;
}

}  // namespace

std::int64_t leech_branch_min_norm(const LayeredCode& code, bool c1_all_ones, const BitWord& c2,
                                   bool parity_coupled) {
  validate_leech_structure(code);
  if (!code.projection(2).contains(c2))
    throw StructureError("the level-2 branch word must be a Golay codeword");
  return branch_optimum(c1_all_ones ? 1 : 0, c2, parity_coupled).cost;
}

LeechMinNorm leech_min_norm(const LayeredCode& code) {
  return leech_branch_search(code, true);
}

LeechMinNorm leech_associated_min_norm(const LayeredCode& code) {
  return leech_branch_search(code, false);
}

}  // namespace latcc

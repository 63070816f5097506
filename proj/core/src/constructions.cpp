#include "latcc/constructions.hpp"

#include <algorithm>

#include "latcc/errors.hpp"

namespace latcc {

namespace {

// Product of the level-code sizes, saturating at cap + 1.
std::uint64_t combo_count(const std::vector<LinearCode>& codes, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const LinearCode& c : codes) {
    int r = c.rank();
    for (int i = 0; i < r; ++i) {
      if (total > cap) return cap + 1;
      total <<= 1;
    }
  }
  return total;
}

Point point_from_blocks(const std::vector<BitWord>& blocks) {
  const int n = blocks[0].length();
  const int L = static_cast<int>(blocks.size());
  Point p(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < n; ++j)
      if (blocks[static_cast<std::size_t>(i)].bit(j)) p[static_cast<std::size_t>(j)] += std::int64_t{1} << i;
  return p;  // already in [0, 2^L)
}

}  // namespace

NestedFamily::NestedFamily(std::vector<LinearCode> codes) : codes_(std::move(codes)) {
  if (codes_.empty()) throw NotNestedError("nested family needs at least one code");
  const int n = codes_[0].length();
  for (const LinearCode& c : codes_)
    if (c.length() != n) throw DimensionError("nested family codes must share one length");
  for (std::size_t i = 0; i + 1 < codes_.size(); ++i) {
    for (const BitWord& g : codes_[i].basis())
      if (!codes_[i + 1].contains(g))
        throw NotNestedError("family is not nested: level " + std::to_string(i + 1) +
                             " generator " + g.str() + " is outside level " +
                             std::to_string(i + 2));
  }
  // Extend a basis level by level; the incremental span test reuses rref.
  std::vector<BitWord> accumulated;
  for (const LinearCode& c : codes_) {
    for (const BitWord& g : c.basis()) {
      std::vector<BitWord> trial = accumulated;
      trial.push_back(g);
      if (rref(trial).rank > static_cast<int>(accumulated.size())) accumulated.push_back(g);
    }
    level_ranks_.push_back(static_cast<int>(accumulated.size()));
  }
  basis_ = std::move(accumulated);
}

Constellation construction_a(const LinearCode& code, std::uint64_t cap) {
  return construction_c({code}, cap);
}

Constellation construction_c(const std::vector<LinearCode>& level_codes, std::uint64_t cap) {
  if (level_codes.empty()) throw DimensionError("construction_c needs at least one level");
  const int n = level_codes[0].length();
  const int L = static_cast<int>(level_codes.size());
  for (const LinearCode& c : level_codes)
    if (c.length() != n) throw DimensionError("level codes must share one length");

  ConstellationSource src =
      L == 1 ? ConstellationSource::construction_a : ConstellationSource::construction_c;
  if (combo_count(level_codes, cap) > cap)
    return Constellation::implicit_factors(src, level_codes);

  std::vector<Point> pts;
  std::vector<BitWord> blocks(static_cast<std::size_t>(L), BitWord(n));
  // Odometer over the level enumerations.
  std::vector<std::vector<BitWord>> words;
  for (const LinearCode& c : level_codes) words.push_back(c.codewords(cap));
  std::vector<std::size_t> idx(static_cast<std::size_t>(L), 0);
  while (true) {
    for (int i = 0; i < L; ++i)
      blocks[static_cast<std::size_t>(i)] = words[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
    pts.push_back(point_from_blocks(blocks));
    int lvl = 0;
    while (lvl < L) {
      if (++idx[static_cast<std::size_t>(lvl)] < words[static_cast<std::size_t>(lvl)].size()) break;
      idx[static_cast<std::size_t>(lvl)] = 0;
      ++lvl;
    }
    if (lvl == L) break;
  }
  return Constellation::explicit_set(n, L, src, std::move(pts));
}

Constellation construction_c_star(const LayeredCode& code, std::uint64_t cap) {
  const int n = code.block_length();
  const int L = code.levels();
  if (code.code().rank() > 62 || code.code().size() > cap)
    return Constellation::implicit_layered(ConstellationSource::construction_c_star, code);
  std::vector<Point> pts;
  code.code().for_each_codeword(
      [&](const BitWord& w) { pts.push_back(point_from_blocks(split_blocks(w, n, L))); }, cap);
  return Constellation::explicit_set(n, L, ConstellationSource::construction_c_star,
                                     std::move(pts));
}

Constellation construction_d(const NestedFamily& family, std::uint64_t cap) {
  const int n = family.length();
  const int L = family.levels();
  const auto& basis = family.extended_basis();
  const auto& ranks = family.level_ranks();

  std::uint64_t combos = 1;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < ranks[static_cast<std::size_t>(i)]; ++j) {
      if (combos > cap) throw EnumerationCapError("construction_d enumeration over cap");
      combos <<= 1;
    }
  }

  // One choice bit per (level, basis-prefix index); scaled basis vectors are
  // added with integer arithmetic, then reduced mod 2^L.
  std::vector<std::pair<int, int>> slots;  // (level index, basis index)
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < ranks[static_cast<std::size_t>(i)]; ++j) slots.emplace_back(i, j);

  std::vector<Point> pts;
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    Point p(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!((mask >> s) & 1)) continue;
      auto [lvl, bj] = slots[s];
      for (int m = 0; m < n; ++m)
        if (basis[static_cast<std::size_t>(bj)].bit(m))
          p[static_cast<std::size_t>(m)] += std::int64_t{1} << lvl;
    }
    pts.push_back(reduce_mod_period(p, L));
  }
  return Constellation::explicit_set(n, L, ConstellationSource::construction_d, std::move(pts));
}

Constellation associated_construction_c(const LayeredCode& code, std::uint64_t cap) {
  std::vector<LinearCode> projections;
  for (int i = 1; i <= code.levels(); ++i) projections.push_back(code.projection(i));
  if (combo_count(projections, cap) > cap)
    return Constellation::implicit_factors(ConstellationSource::associated_c,
                                           std::move(projections));
  Constellation k = construction_c(projections, cap);
  return Constellation::explicit_set(k.dimension(), k.levels(),
                                     ConstellationSource::associated_c, k.cosets());
}

}  // namespace latcc

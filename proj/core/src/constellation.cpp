#include "latcc/constellation.hpp"

#include <algorithm>

#include "latcc/errors.hpp"

namespace latcc {

Point reduce_mod_period(const Point& p, int levels) {
  const std::int64_t period = std::int64_t{1} << levels;
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t r = p[i] % period;
    if (r < 0) r += period;
    out[i] = r;
  }
  return out;
}

const char* source_name(ConstellationSource s) {
  switch (s) {
    case ConstellationSource::construction_a: return "construction_a";
    case ConstellationSource::construction_c: return "construction_c";
    case ConstellationSource::construction_c_star: return "construction_c_star";
    case ConstellationSource::construction_d: return "construction_d";
    case ConstellationSource::associated_c: return "associated_c";
  }
  return "unknown";
}

Constellation Constellation::explicit_set(int dimension, int levels, ConstellationSource source,
                                          std::vector<Point> cosets) {
  if (dimension <= 0 || levels <= 0) throw DimensionError("constellation needs n, L >= 1");
  const std::int64_t period = std::int64_t{1} << levels;
  for (const Point& p : cosets) {
    if (static_cast<int>(p.size()) != dimension)
      throw DimensionError("coset point dimension mismatch");
    for (std::int64_t c : p)
      if (c < 0 || c >= period) throw Error("coset coordinate outside [0, 2^L)");
  }
  std::sort(cosets.begin(), cosets.end());
  cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
  Constellation k(dimension, levels, source, true);
  k.cosets_ = std::move(cosets);
  return k;
}

Constellation Constellation::implicit_layered(ConstellationSource source, LayeredCode code) {
  Constellation k(code.block_length(), code.levels(), source, false);
  k.layered_.emplace(std::move(code));
  return k;
}

Constellation Constellation::implicit_factors(ConstellationSource source,
                                              std::vector<LinearCode> level_codes) {
  if (level_codes.empty()) throw DimensionError("implicit_factors needs at least one level");
  const int n = level_codes[0].length();
  for (const LinearCode& c : level_codes)
    if (c.length() != n) throw DimensionError("level codes must share one length");
  Constellation k(n, static_cast<int>(level_codes.size()), source, false);
  k.factors_ = std::move(level_codes);
  return k;
}

std::uint64_t Constellation::points_per_period() const {
  if (explicit_) return cosets_.size();
  if (layered_) return layered_->code().size();
  int total_rank = 0;
  for (const LinearCode& c : factors_) total_rank += c.rank();
  if (total_rank > 62) throw EnumerationCapError("points per period exceeds 2^62");
  return std::uint64_t{1} << total_rank;
}

const std::vector<Point>& Constellation::cosets() const {
  if (!explicit_) throw StructureError("implicit constellation has no explicit coset list");
  return cosets_;
}

const LayeredCode& Constellation::source_code() const {
  if (!layered_) throw StructureError("constellation has no layered source code");
  return *layered_;
}

const std::vector<LinearCode>& Constellation::factor_codes() const {
  if (explicit_ || layered_) throw StructureError("constellation has no factor codes");
  return factors_;
}

bool Constellation::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dimension_)
    throw DimensionError("contains: point dimension mismatch");
  const Point r = reduce_mod_period(p, levels_);
  if (explicit_) return std::binary_search(cosets_.begin(), cosets_.end(), r);
  // Digits of each reduced coordinate are the level bits of the unique
  // candidate decomposition; membership is a code question from there.
  std::vector<BitWord> blocks;
  blocks.reserve(static_cast<std::size_t>(levels_));
  for (int lvl = 0; lvl < levels_; ++lvl) {
    BitWord b(dimension_);
    for (int j = 0; j < dimension_; ++j) b.set_bit(j, (r[static_cast<std::size_t>(j)] >> lvl) & 1);
    blocks.push_back(std::move(b));
  }
  if (layered_) return layered_->contains_blocks(blocks);
  for (int lvl = 0; lvl < levels_; ++lvl)
    if (!factors_[static_cast<std::size_t>(lvl)].contains(blocks[static_cast<std::size_t>(lvl)]))
      return false;
  return true;
}

}  // namespace latcc

#include "latcc/layered_code.hpp"

#include "latcc/errors.hpp"

namespace latcc {

std::vector<BitWord> split_blocks(const BitWord& word, int block_length, int levels) {
  if (block_length <= 0 || levels <= 0 || word.length() != block_length * levels)
    throw DimensionError("split_blocks: word length is not block_length * levels");
  std::vector<BitWord> blocks;
  blocks.reserve(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) blocks.push_back(word.slice(i * block_length, block_length));
  return blocks;
}

BitWord concat_blocks(const std::vector<BitWord>& blocks) {
  return BitWord::concat(blocks);
}

LayeredCode::LayeredCode(LinearCode code, int block_length, int levels)
    : code_(std::move(code)), block_length_(block_length), levels_(levels) {
  if (block_length <= 0 || levels <= 0)
    throw DimensionError("LayeredCode: block_length and levels must be positive");
  if (code_.length() != block_length * levels)
    throw DimensionError("LayeredCode: code length is not block_length * levels");
}

bool LayeredCode::contains_blocks(const std::vector<BitWord>& blocks) const {
  if (static_cast<int>(blocks.size()) != levels_)
    throw DimensionError("contains_blocks: wrong number of blocks");
  return code_.contains(concat_blocks(blocks));
}

LinearCode LayeredCode::projection(int level) const {
  if (level < 1 || level > levels_) throw Error("projection level out of range");
  std::vector<BitWord> gens;
  for (const BitWord& g : code_.basis())
    gens.push_back(g.slice((level - 1) * block_length_, block_length_));
  return LinearCode(block_length_, std::move(gens));
}

LinearCode LayeredCode::antiprojection_zero(int level) const {
  if (level < 1 || level > levels_) throw Error("antiprojection level out of range");
  std::vector<BitWord> permuted;
  for (const BitWord& g : code_.basis()) {
    std::vector<BitWord> blocks = split_blocks(g, block_length_, levels_);
    std::vector<BitWord> reordered;
    for (int i = 1; i <= levels_; ++i)
      if (i != level) reordered.push_back(blocks[static_cast<std::size_t>(i - 1)]);
    reordered.push_back(blocks[static_cast<std::size_t>(level - 1)]);
    permuted.push_back(concat_blocks(reordered));
  }
  RrefResult rr = rref(std::move(permuted));
  const int offset = (levels_ - 1) * block_length_;
  std::vector<BitWord> gens;
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[static_cast<std::size_t>(i)] >= offset)
      gens.push_back(rr.rows[static_cast<std::size_t>(i)].slice(offset, block_length_));
  return LinearCode(block_length_, std::move(gens));
}

}  // namespace latcc

#pragma once

#include <vector>

#include "latcc/linear_code.hpp"

namespace latcc {

// Splits a word of length n*L into L blocks of length n; block i (1-based)
// covers coordinates [(i-1)*n, i*n).
std::vector<BitWord> split_blocks(const BitWord& word, int block_length, int levels);
BitWord concat_blocks(const std::vector<BitWord>& blocks);

// A linear code of length n*L whose codewords are read as L stacked level
// vectors of length n.
class LayeredCode {
 public:
  LayeredCode(LinearCode code, int block_length, int levels);

  const LinearCode& code() const { return code_; }
  int block_length() const { return block_length_; }  // n
  int levels() const { return levels_; }              // L

  bool contains_blocks(const std::vector<BitWord>& blocks) const;

  // Code spanned by the given level's blocks over all codewords (1-based).
  LinearCode projection(int level) const;

  // Blocks at `level` of the codewords vanishing on every other block.
  // Row-reduce with the other blocks' columns ordered first: an echelon row
  // whose pivot lies in the trailing block is zero outside it, and the RREF
  // coefficients of any codeword supported only there pick exactly those
  // rows. No enumeration, so rank-36 inputs are fine.
  LinearCode antiprojection_zero(int level) const;

  bool operator==(const LayeredCode& o) const = default;

 private:
  LinearCode code_;
  int block_length_;
  int levels_;
};

}  // namespace latcc

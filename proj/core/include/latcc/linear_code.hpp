#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "latcc/bitword.hpp"

namespace latcc {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 24;

struct RrefResult {
  std::vector<BitWord> rows;  // nonzero rows, reduced row-echelon form
  std::vector<int> pivots;    // pivot column of each row, strictly increasing
  int rank = 0;
};

// Gauss-Jordan over F2. Span is preserved; zero rows are dropped.
RrefResult rref(std::vector<BitWord> rows);

// Binary linear code held as its RREF basis, so code equality is equality of
// the stored rows.
class LinearCode {
 public:
  explicit LinearCode(int length);  // the zero code {0}
  LinearCode(int length, std::vector<BitWord> generators);
  static LinearCode full(int length);
  // `words` must be exactly the codeword set of some linear code. Otherwise
  // throws NotLinearError carrying an XOR of listed words that the list lacks.
  static LinearCode from_word_list(int length, const std::vector<BitWord>& words);

  int length() const { return length_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const;  // 2^rank
  const std::vector<BitWord>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const BitWord& w) const;
  bool contains(const LinearCode& sub) const;

  // Visits all 2^rank codewords once, starting from zero, flipping one basis
  // row per step (Gray order). Throws EnumerationCapError if 2^rank > cap.
  void for_each_codeword(const std::function<void(const BitWord&)>& visit,
                         std::uint64_t cap = kDefaultEnumCap) const;
  std::vector<BitWord> codewords(std::uint64_t cap = kDefaultEnumCap) const;  // sorted

  std::map<int, std::uint64_t> weight_distribution(std::uint64_t cap = kDefaultEnumCap) const;
  int min_weight(std::uint64_t cap = kDefaultEnumCap) const;  // over nonzero words

  bool operator==(const LinearCode& o) const = default;

 private:
  int length_ = 0;
  std::vector<BitWord> basis_;
  std::vector<int> pivots_;
};

}  // namespace latcc

#pragma once

#include "latcc/constellation.hpp"

namespace latcc {

// Ascending chain C_1 <= C_2 <= ... <= C_L of codes of one length; throws
// NotNestedError when a generator of C_i falls outside C_{i+1}.
class NestedFamily {
 public:
  explicit NestedFamily(std::vector<LinearCode> codes);

  int length() const { return codes_[0].length(); }
  int levels() const { return static_cast<int>(codes_.size()); }
  const std::vector<LinearCode>& codes() const { return codes_; }

  // Basis b_1..b_{k_L} of C_L whose prefix b_1..b_{k_i} spans C_i.
  const std::vector<BitWord>& extended_basis() const { return basis_; }
  const std::vector<int>& level_ranks() const { return level_ranks_; }  // k_i

 private:
  std::vector<LinearCode> codes_;
  std::vector<BitWord> basis_;
  std::vector<int> level_ranks_;
};

// Single level: the codewords themselves are the cosets mod 2.
Constellation construction_a(const LinearCode& code, std::uint64_t cap = kDefaultEnumCap);

// Independent levels: sums sum_i 2^{i-1} c_i mod 2^L over C_1 x ... x C_L.
// Past the cap the factor codes are retained (implicit mode).
Constellation construction_c(const std::vector<LinearCode>& level_codes,
                             std::uint64_t cap = kDefaultEnumCap);

// Jointly coded levels: one codeword of the layered code supplies all L level
// vectors. Past the cap the layered code is retained (implicit mode).
Constellation construction_c_star(const LayeredCode& code, std::uint64_t cap = kDefaultEnumCap);

// Nested chain: integer combinations sum_i 2^{i-1} sum_{j<=k_i} a_ij b_j
// mod 2^L over the extended basis. Always a lattice. Explicit only.
Constellation construction_d(const NestedFamily& family, std::uint64_t cap = kDefaultEnumCap);

// construction_c over the projections of a layered code; the independent-level
// constellation containing the jointly coded one.
Constellation associated_construction_c(const LayeredCode& code,
                                        std::uint64_t cap = kDefaultEnumCap);

}  // namespace latcc

#pragma once

#include <optional>
#include <variant>

#include "latcc/constellation.hpp"
#include "latcc/constructions.hpp"

namespace latcc {

// A point written as sum_i 2^{i-1} blocks[i-1] + 2^L translate. Blocks are
// arbitrary words of F2^n; nothing here requires codeword membership.
struct Decomposition {
  std::vector<BitWord> blocks;
  Point translate;

  Point reconstruct() const;
};

// Carry terms of the closed-form decomposition of x + y. With
// sigma_i = c_i * c~_i and delta_i = c_i XOR c~_i:
//   s_i = sigma_i XOR r_i^1 XOR ... XOR r_i^{i-1}
//   r_i^1 = delta_i * sigma_{i-1}
//   r_i^j = delta_i * r_{i-1}^{j-1}        (2 <= j <= i-1)
// which expands to r_i^j = delta_i * ... * delta_{i-j+1} * sigma_{i-j}, the
// j-step carry path of schoolbook addition, so s_i is the carry out of level
// i. The index ranges are exactly those for which every referenced term
// exists; the whole recursion is pinned by the integer-addition oracle in the
// tests (any deviation breaks x + y reconstruction).
struct CarryState {
  std::vector<BitWord> s;               // s[i-1] = s_i, i = 1..L
  std::vector<std::vector<BitWord>> r;  // r[i-1][j-1] = r_i^j, j = 1..i-1
};

CarryState carry_state(const std::vector<BitWord>& a, const std::vector<BitWord>& b);

// Exact integer sum of two decomposed points, staying in decomposed form:
// blocks (c_1 XOR c~_1, s_1 XOR (c_2 XOR c~_2), ..., s_{L-1} XOR (c_L XOR c~_L))
// and translate s_L + z + z~.
Decomposition carry_sum(const Decomposition& a, const Decomposition& b);

enum class CheckMethod { structural, nested_closure, brute_force, undecided };

// Wire names used by the CLI: "theorem2", "theorem1", "bruteforce", "undecided".
const char* method_name(CheckMethod m);

struct PairWitness {
  Point a, b;  // a + b escapes the coset set
};
struct SchurWitness {
  int target_level;  // product of level target_level - 1 generators escapes
  BitWord g, h;
};
using Witness = std::variant<PairWitness, SchurWitness>;

struct LatticeVerdict {
  std::optional<bool> is_lattice;         // nullopt: no claim made
  CheckMethod method = CheckMethod::undecided;
  std::optional<bool> precondition_held;  // nullopt: not applicable
  std::optional<Witness> witness;
};

// Group-closure oracle on an explicit constellation: the coset set must be
// closed under addition mod 2^L. Scans distinct pairs in lexicographic order
// first, then doublings, and reports the first failure; doublings are part of
// closure ({0, p} can be closed under distinct sums alone). Throws
// StructureError on implicit input.
LatticeVerdict closure_check(const Constellation& k);

// Independent-level criterion: for a nested chain C_1 <= ... <= C_L the
// multilevel constellation is a lattice iff every Schur product of C_i
// codewords lies in C_{i+1}. Schur distributes over XOR, so generator pairs
// decide. Non-nested input yields no latticeness claim.
LatticeVerdict nested_closure_check(const std::vector<LinearCode>& level_codes);

// Jointly coded criterion: when C_i <= S_{i+1}(0,..,0) for all i < L, the
// constellation is a lattice iff each S_i(0,..,0) absorbs the Schur products
// of C_{i-1} generator pairs. A failed chain leaves the question open here
// (the criterion is silent, not negative).
LatticeVerdict structural_check(const LayeredCode& code);

// structural_check, then closure_check when the chain precondition failed and
// the coset set fits the cap; otherwise an undecided verdict.
LatticeVerdict decide_latticeness(const LayeredCode& code, std::uint64_t cap = kDefaultEnumCap);

// When structural_check certifies the jointly coded constellation, the
// independent-level constellation over the projections is a lattice as well;
// re-verified here via nested_closure_check. Throws StructureError unless
// structural_check passed with its precondition held.
LatticeVerdict associated_check(const LayeredCode& code);

}  // namespace latcc

#pragma once

#include <cstdint>

#include "latcc/constellation.hpp"
#include "latcc/latticeness.hpp"

namespace latcc {

// Componentwise least-absolute residue mod 2^L; the tie at 2^{L-1} resolves
// to +2^{L-1}, so coordinates land in (-2^{L-1}, 2^{L-1}].
Point min_representative(const Point& p, int levels);

std::int64_t norm_sq(const Point& p);

struct MinDistance {
  std::int64_t d2 = 0;
  Point a, b;  // witness pair realizing d2
};

// Least squared distance between distinct points of K + 2^L Z^n: the minimum
// over coset pairs of |min_representative(p - q)|^2 and the pure-translate
// distance 4^L. Explicit constellations only.
MinDistance min_distance_sq(const Constellation& k);

struct DensityReport {
  int dimension = 0;
  int levels = 0;
  std::uint64_t points_per_period = 0;
  std::int64_t min_distance_sq = 0;
  double center_density = 0.0;   // (d/2)^n * M / 2^{nL}
  double packing_density = 0.0;  // center_density * V_n
  // center_density as an exact reduced fraction, when n is even and the
  // integers fit; 0/0 otherwise.
  std::uint64_t center_num = 0;
  std::uint64_t center_den = 0;
};

double ball_volume(int n);  // unit-ball volume V_n = pi^{n/2} / Gamma(n/2 + 1)

DensityReport packing_density(const Constellation& k);                   // computes d2
DensityReport packing_density(const Constellation& k, std::int64_t d2);  // d2 supplied

struct LeechMinNorm {
  std::int64_t norm_sq = 0;
  Decomposition witness;
};

// Exact minimum nonzero squared norm of the three-level Leech constellation:
// for each of the 2 x 4096 (c1, c2) branches pick the cheaper c3 bit per
// coordinate, then repair the parity coupling by the cheapest single flip
// (penalties are nonnegative, so one flip beats any odd number). The 2^36
// cosets are never materialized. Validates the expected repetition / Golay /
// parity structure of `code` first.
LeechMinNorm leech_min_norm(const LayeredCode& code);

// Minimum nonzero squared norm within the single branch where level 1 is
// fixed (zero or all-ones) and level 2 is the given Golay word; level 3
// ranges over words of parity c1_all_ones when parity_coupled, otherwise
// freely. This is the per-branch rule the search above minimizes over,
// exposed so it can be pinned against full level-3 enumeration.
std::int64_t leech_branch_min_norm(const LayeredCode& code, bool c1_all_ones, const BitWord& c2,
                                   bool parity_coupled);

// Same branch search with the parity coupling dropped: minimum nonzero
// squared norm of the associated independent-level constellation.
LeechMinNorm leech_associated_min_norm(const LayeredCode& code);

}  // namespace latcc

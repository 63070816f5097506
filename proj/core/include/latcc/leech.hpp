#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcc/geometry.hpp"
#include "latcc/latticeness.hpp"
#include "latcc/layered_code.hpp"

namespace latcc {

// The 72-bit layered code behind the Leech constellation: n=24, L=3, rank 36.
// One row couples the all-ones first level to odd parity at level 3, twelve
// rows put the Golay generators in level 2, twenty-three rows span the
// even-parity code in level 3. Block 3's parity equals block 1's bit; block 2
// ranges freely over the Golay code.
LayeredCode build_leech_layered_code();

struct NamedCheck {
  std::string name;
  bool pass = false;
};

struct SchurCheck {
  int level = 0;  // products of level-(level-1) generators, absorbed at this level
  bool pass = false;
  std::optional<SchurWitness> counterexample;
};

struct LeechReport {
  std::vector<NamedCheck> chain_checks;
  std::vector<SchurCheck> schur_checks;
  LatticeVerdict structural;
  LeechMinNorm min_norm;
  DensityReport density;
  LeechMinNorm associated_min_norm;
  DensityReport associated_density;
  bool separation_witnessed = false;  // (0 | 0 | e1) is in C1 x C2 x C3 but not in C
  bool verdict = false;
};

// Full verification pipeline: the containment chain (with the all-ones
// parity-check product and the even-weight argument behind C2 <= S3(0)), the
// two generator-pair Schur closures, the structural latticeness check, the
// exact minimum norms, and both density reports. Failures land in the report,
// never in exceptions; verdict is true iff every check passes and the
// structural check certifies a lattice.
LeechReport leech_verify();

}  // namespace latcc

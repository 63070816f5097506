#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "latcc/linear_code.hpp"

namespace latcc {

LinearCode repetition_code(int n);   // span of the all-ones word
LinearCode even_parity_code(int n);  // all even-weight words, rank n-1
LinearCode golay24();                // the [24,12,8] extended binary Golay code

// The 12x12 right block of the Golay generator matrix (I | B), embedded
// verbatim; symmetric, so the row and column generator conventions coincide.
const std::array<std::array<int, 12>, 12>& golay24_b_matrix();

// Rows of the parity-check matrix H = (B | I); kept as a consistency check.
std::vector<BitWord> golay24_parity_checks();

// name in {"repetition", "even_parity", "golay24"}; golay24 requires n == 24.
LinearCode code_library(std::string_view name, int n);

}  // namespace latcc

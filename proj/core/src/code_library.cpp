#include "latcc/code_library.hpp"

#include "latcc/errors.hpp"

namespace latcc {

LinearCode repetition_code(int n) {
  return LinearCode(n, {BitWord::ones(n)});
}

LinearCode even_parity_code(int n) {
  std::vector<BitWord> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(BitWord::unit_sum(n, {i, i + 1}));
  return LinearCode(n, std::move(gens));
}

const std::array<std::array<int, 12>, 12>& golay24_b_matrix() {
  static const std::array<std::array<int, 12>, 12> b = {{
      {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1},
      {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
      {0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1},
      {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
      {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
      {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
      {0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1},
      {0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1},
      {0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1},
      {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1},
      {0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
  }};
  return b;
}

LinearCode golay24() {
  const auto& b = golay24_b_matrix();
  std::vector<BitWord> gens;
  for (int row = 0; row < 12; ++row) {
    BitWord g(24);
    g.set_bit(row, true);
    for (int col = 0; col < 12; ++col)
      if (b[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)])
        g.set_bit(12 + col, true);
    gens.push_back(g);
  }
  return LinearCode(24, std::move(gens));
}

std::vector<BitWord> golay24_parity_checks() {
  const auto& b = golay24_b_matrix();
  std::vector<BitWord> rows;
  for (int row = 0; row < 12; ++row) {
    BitWord h(24);
    for (int col = 0; col < 12; ++col)
      if (b[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)])
        h.set_bit(col, true);
    h.set_bit(12 + row, true);
    rows.push_back(h);
  }
  return rows;
}

LinearCode code_library(std::string_view name, int n) {
  if (name == "repetition") return repetition_code(n);
  if (name == "even_parity") return even_parity_code(n);
  if (name == "golay24") {
    if (n != 24) throw Error("golay24 has length 24");
    return golay24();
  }
  throw Error("unknown library code: " + std::string(name));
}

}  // namespace latcc

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcc/layered_code.hpp"

namespace latcc {

using Point = std::vector<std::int64_t>;

// Componentwise reduction into the canonical coset cube [0, 2^L)^n.
Point reduce_mod_period(const Point& p, int levels);

enum class ConstellationSource {
  construction_a,
  construction_c,
  construction_c_star,
  construction_d,
  associated_c,
};

const char* source_name(ConstellationSource s);

// Periodic point set K + 2^L Z^n given by its coset points K in [0, 2^L)^n.
// Explicit mode stores K sorted; implicit mode (enumeration cap exceeded)
// keeps the defining codes and answers membership through them.
class Constellation {
 public:
  static Constellation explicit_set(int dimension, int levels, ConstellationSource source,
                                    std::vector<Point> cosets);
  static Constellation implicit_layered(ConstellationSource source, LayeredCode code);
  static Constellation implicit_factors(ConstellationSource source,
                                        std::vector<LinearCode> level_codes);

  int dimension() const { return dimension_; }
  int levels() const { return levels_; }
  ConstellationSource source() const { return source_; }
  bool is_explicit() const { return explicit_; }
  std::uint64_t points_per_period() const;

  const std::vector<Point>& cosets() const;             // explicit mode
  const LayeredCode& source_code() const;               // implicit, jointly coded
  const std::vector<LinearCode>& factor_codes() const;  // implicit, independent levels

  bool contains(const Point& p) const;

 private:
  Constellation(int dimension, int levels, ConstellationSource source, bool is_explicit)
      : dimension_(dimension), levels_(levels), source_(source), explicit_(is_explicit) {}

  int dimension_;
  int levels_;
  ConstellationSource source_;
  bool explicit_;
  std::vector<Point> cosets_;
  std::optional<LayeredCode> layered_;
  std::vector<LinearCode> factors_;
};

}  // namespace latcc

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latcc {

// Fixed-length word over F2, bit-packed into 64-bit limbs so lengths past 64
// (the 72-bit Leech rows) cost nothing special. Coordinate i is bit i of limb
// i/64; serialization is index-ascending left to right: "b0 b1 ... b_{n-1}".
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(int length);

  // "0110..." -> word; throws Error on characters outside {0,1}.
  static BitWord parse(std::string_view bits);
  // Word of given length with ones exactly at the listed coordinates.
  static BitWord unit_sum(int length, std::initializer_list<int> support);
  static BitWord ones(int length);

  int length() const { return length_; }
  bool bit(int i) const;
  void set_bit(int i, bool value);
  int weight() const;
  bool parity() const { return weight() & 1; }
  bool is_zero() const;

  BitWord& operator^=(const BitWord& o);
  BitWord& operator&=(const BitWord& o);
  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

  bool operator==(const BitWord& o) const = default;
  // Length first, then lexicographic by coordinate ("0" < "1").
  std::strong_ordering operator<=>(const BitWord& o) const;

  BitWord slice(int start, int count) const;
  static BitWord concat(std::span<const BitWord> parts);

  std::string str() const;

 private:
  int length_ = 0;
  std::vector<std::uint64_t> limbs_;

  void require_same_length(const BitWord& o) const;
};

// Coordinatewise product; the carry term of x + y = (x XOR y) + 2(x AND y).
inline BitWord schur(const BitWord& a, const BitWord& b) { return a & b; }

}  // namespace latcc

#include "latcc/bitword.hpp"

#include <bit>

#include "latcc/errors.hpp"

namespace latcc {

namespace {
constexpr int kLimbBits = 64;

int limb_count(int length) { return (length + kLimbBits - 1) / kLimbBits; }
}  // namespace

BitWord::BitWord(int length) : length_(length), limbs_(limb_count(length), 0) {
  if (length < 0) throw Error("negative BitWord length");
}

BitWord BitWord::parse(std::string_view bits) {
  BitWord w(static_cast<int>(bits.size()));
  for (int i = 0; i < w.length_; ++i) {
    char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1') throw Error(std::string("bad bit character '") + c + "'");
    if (c == '1') w.set_bit(i, true);
  }
  return w;
}

BitWord BitWord::unit_sum(int length, std::initializer_list<int> support) {
  BitWord w(length);
  for (int i : support) w.set_bit(i, true);
  return w;
}

BitWord BitWord::ones(int length) {
  BitWord w(length);
  for (int i = 0; i < length; ++i) w.set_bit(i, true);
  return w;
}

bool BitWord::bit(int i) const {
  if (i < 0 || i >= length_) throw Error("bit index out of range");
  return (limbs_[static_cast<std::size_t>(i / kLimbBits)] >> (i % kLimbBits)) & 1u;
}

void BitWord::set_bit(int i, bool value) {
  if (i < 0 || i >= length_) throw Error("bit index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % kLimbBits);
  auto& limb = limbs_[static_cast<std::size_t>(i / kLimbBits)];
  if (value)
    limb |= mask;
  else
    limb &= ~mask;
}

int BitWord::weight() const {
  int w = 0;
  for (std::uint64_t limb : limbs_) w += std::popcount(limb);
  return w;
}

bool BitWord::is_zero() const {
  for (std::uint64_t limb : limbs_)
    if (limb) return false;
  return true;
}

void BitWord::require_same_length(const BitWord& o) const {
  if (length_ != o.length_) throw DimensionError("BitWord length mismatch");
}

BitWord& BitWord::operator^=(const BitWord& o) {
  require_same_length(o);
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& o) {
  require_same_length(o);
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= o.limbs_[i];
  return *this;
}

std::strong_ordering BitWord::operator<=>(const BitWord& o) const {
  if (length_ != o.length_) return length_ <=> o.length_;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t diff = limbs_[i] ^ o.limbs_[i];
    if (diff) {
      // Lowest differing limb bit is the first differing coordinate.
      int b = std::countr_zero(diff);
      return ((limbs_[i] >> b) & 1u) ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BitWord BitWord::slice(int start, int count) const {
  if (start < 0 || count < 0 || start + count > length_)
    throw Error("slice out of range");
  BitWord out(count);
  for (int i = 0; i < count; ++i) out.set_bit(i, bit(start + i));
  return out;
}

BitWord BitWord::concat(std::span<const BitWord> parts) {
  int total = 0;
  for (const BitWord& p : parts) total += p.length();
  BitWord out(total);
  int at = 0;
  for (const BitWord& p : parts) {
    for (int i = 0; i < p.length(); ++i) out.set_bit(at + i, p.bit(i));
    at += p.length();
  }
  return out;
}

std::string BitWord::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace latcc

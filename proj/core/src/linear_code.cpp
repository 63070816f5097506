#include "latcc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "latcc/errors.hpp"

namespace latcc {

RrefResult rref(std::vector<BitWord> rows) {
  RrefResult out;
  if (rows.empty()) return out;
  const int width = rows[0].length();
  for (const BitWord& r : rows)
    if (r.length() != width) throw DimensionError("rref: mixed row lengths");

  int next = 0;
  for (int col = 0; col < width && next < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = next; i < static_cast<int>(rows.size()); ++i) {
      if (rows[static_cast<std::size_t>(i)].bit(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(next)], rows[static_cast<std::size_t>(pivot)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != next && rows[static_cast<std::size_t>(i)].bit(col))
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(next)];
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(static_cast<std::size_t>(next));
  out.rows = std::move(rows);
  out.rank = next;
  return out;
}

LinearCode::LinearCode(int length) : length_(length) {
  if (length <= 0) throw Error("code length must be positive");
}

LinearCode::LinearCode(int length, std::vector<BitWord> generators) : LinearCode(length) {
  for (const BitWord& g : generators)
    if (g.length() != length) throw DimensionError("generator length does not match code length");
  RrefResult rr = rref(std::move(generators));
  basis_ = std::move(rr.rows);
  pivots_ = std::move(rr.pivots);
}

LinearCode LinearCode::full(int length) {
  std::vector<BitWord> gens;
  for (int i = 0; i < length; ++i) gens.push_back(BitWord::unit_sum(length, {i}));
  return LinearCode(length, std::move(gens));
}

LinearCode LinearCode::from_word_list(int length, const std::vector<BitWord>& words) {
  if (words.empty())
    throw NotLinearError("word list is empty; a code lists at least the zero word",
                         BitWord(length).str());
  std::set<BitWord> unique;
  for (const BitWord& w : words) {
    if (w.length() != length) throw DimensionError("listed word length does not match");
    if (!unique.insert(w).second)
      throw NotLinearError("word " + w.str() + " is listed twice", w.str());
  }
  // A finite set closed under XOR of every (ordered, with repetition) pair is
  // a subspace and hence equals its own span; the i == j case forces zero in.
  std::vector<BitWord> list(words);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i; j < list.size(); ++j) {
      BitWord x = list[i] ^ list[j];
      if (!unique.contains(x))
        throw NotLinearError("listed words do not form a linear code: " + list[i].str() +
                                 " XOR " + list[j].str() + " = " + x.str() +
                                 " is not in the list",
                             x.str());
    }
  }
  return LinearCode(length, list);
}

std::uint64_t LinearCode::size() const {
  if (rank() > 62) throw EnumerationCapError("code size exceeds 2^62");
  return std::uint64_t{1} << rank();
}

bool LinearCode::contains(const BitWord& w) const {
  if (w.length() != length_) throw DimensionError("membership test length mismatch");
  BitWord residue = w;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (residue.bit(pivots_[i])) residue ^= basis_[i];
  return residue.is_zero();
}

bool LinearCode::contains(const LinearCode& sub) const {
  for (const BitWord& g : sub.basis())
    if (!contains(g)) return false;
  return true;
}

void LinearCode::for_each_codeword(const std::function<void(const BitWord&)>& visit,
                                   std::uint64_t cap) const {
  if (rank() >= 63 || size() > cap)
    throw EnumerationCapError("codeword enumeration over cap");
  BitWord cur(length_);
  visit(cur);
  const std::uint64_t total = size();
  for (std::uint64_t t = 1; t < total; ++t) {
    cur ^= basis_[static_cast<std::size_t>(std::countr_zero(t))];
    visit(cur);
  }
}

std::vector<BitWord> LinearCode::codewords(std::uint64_t cap) const {
  std::vector<BitWord> out;
  out.reserve(static_cast<std::size_t>(size() <= cap ? size() : 0));
  for_each_codeword([&](const BitWord& w) { out.push_back(w); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::uint64_t> LinearCode::weight_distribution(std::uint64_t cap) const {
  std::map<int, std::uint64_t> dist;
  for_each_codeword([&](const BitWord& w) { ++dist[w.weight()]; }, cap);
  return dist;
}

int LinearCode::min_weight(std::uint64_t cap) const {
  if (rank() == 0) throw Error("minimum weight of the zero code is undefined");
  int best = length_ + 1;
  for_each_codeword(
      [&](const BitWord& w) {
        int wt = w.weight();
        if (wt > 0 && wt < best) best = wt;
      },
      cap);
  return best;
}

}  // namespace latcc

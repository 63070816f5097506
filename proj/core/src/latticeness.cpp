#include "latcc/latticeness.hpp"

#include <algorithm>

#include "latcc/errors.hpp"

namespace latcc {

Point Decomposition::reconstruct() const {
  if (blocks.empty()) throw DimensionError("decomposition needs at least one block");
  const int n = blocks[0].length();
  const int L = static_cast<int>(blocks.size());
  if (static_cast<int>(translate.size()) != n)
    throw DimensionError("translate dimension mismatch");
  Point p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::int64_t v = translate[static_cast<std::size_t>(j)] << L;
    for (int i = 0; i < L; ++i)
      if (blocks[static_cast<std::size_t>(i)].bit(j)) v += std::int64_t{1} << i;
    p[static_cast<std::size_t>(j)] = v;
  }
  return p;
}

CarryState carry_state(const std::vector<BitWord>& a, const std::vector<BitWord>& b) {
  const int L = static_cast<int>(a.size());
  if (b.size() != a.size()) throw DimensionError("carry_state: level count mismatch");
  if (L == 0) throw DimensionError("carry_state: empty block lists");
  for (int i = 0; i < L; ++i)
    if (a[static_cast<std::size_t>(i)].length() != b[static_cast<std::size_t>(i)].length() ||
        a[static_cast<std::size_t>(i)].length() != a[0].length())
      throw DimensionError("carry_state: block length mismatch");

  std::vector<BitWord> sigma, delta;
  for (int i = 0; i < L; ++i) {
    sigma.push_back(schur(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
    delta.push_back(a[static_cast<std::size_t>(i)] ^ b[static_cast<std::size_t>(i)]);
  }

  CarryState st;
  st.r.resize(static_cast<std::size_t>(L));
  for (int i = 1; i < L; ++i) {  // 0-based level i holds r_{i+1}^j
    auto& row = st.r[static_cast<std::size_t>(i)];
    row.push_back(schur(delta[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i - 1)]));
    for (int j = 2; j <= i; ++j)
      row.push_back(schur(delta[static_cast<std::size_t>(i)],
                          st.r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]));
  }
  for (int i = 0; i < L; ++i) {
    BitWord s = sigma[static_cast<std::size_t>(i)];
    for (const BitWord& term : st.r[static_cast<std::size_t>(i)]) s ^= term;
    st.s.push_back(std::move(s));
  }
  return st;
}

Decomposition carry_sum(const Decomposition& a, const Decomposition& b) {
  if (a.blocks.size() != b.blocks.size())
    throw DimensionError("carry_sum: level count mismatch");
  const int L = static_cast<int>(a.blocks.size());
  const int n = a.blocks.empty() ? 0 : a.blocks[0].length();
  if (static_cast<int>(a.translate.size()) != n || static_cast<int>(b.translate.size()) != n)
    throw DimensionError("carry_sum: translate dimension mismatch");

  CarryState st = carry_state(a.blocks, b.blocks);
  Decomposition out;
  out.blocks.push_back(a.blocks[0] ^ b.blocks[0]);
  for (int i = 1; i < L; ++i)
    out.blocks.push_back(st.s[static_cast<std::size_t>(i - 1)] ^
                         (a.blocks[static_cast<std::size_t>(i)] ^ b.blocks[static_cast<std::size_t>(i)]));
  out.translate.resize(static_cast<std::size_t>(n));
  const BitWord& carry_out = st.s[static_cast<std::size_t>(L - 1)];
  for (int j = 0; j < n; ++j)
    out.translate[static_cast<std::size_t>(j)] = (carry_out.bit(j) ? 1 : 0) +
                                                 a.translate[static_cast<std::size_t>(j)] +
                                                 b.translate[static_cast<std::size_t>(j)];
  return out;
}

const char* method_name(CheckMethod m) {
  switch (m) {
    case CheckMethod::structural: return "theorem2";
    case CheckMethod::nested_closure: return "theorem1";
    case CheckMethod::brute_force: return "bruteforce";
    case CheckMethod::undecided: return "undecided";
  }
  return "undecided";
}

LatticeVerdict closure_check(const Constellation& k) {
  if (!k.is_explicit())
    throw StructureError("closure_check needs an explicit constellation");
  const auto& cosets = k.cosets();
  const int L = k.levels();

  auto in_set = [&](const Point& p) {
    return std::binary_search(cosets.begin(), cosets.end(), p);
  };
  auto sum_reduced = [&](const Point& p, const Point& q) {
    Point s(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) s[j] = p[j] + q[j];
    return reduce_mod_period(s, L);
  };

  LatticeVerdict v;
  v.method = CheckMethod::brute_force;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      if (!in_set(sum_reduced(cosets[i], cosets[j]))) {
        v.is_lattice = false;
        v.witness = PairWitness{cosets[i], cosets[j]};
        return v;
      }
    }
  }
  for (const Point& p : cosets) {
    if (!in_set(sum_reduced(p, p))) {
      v.is_lattice = false;
      v.witness = PairWitness{p, p};
      return v;
    }
  }
  v.is_lattice = true;
  return v;
}

LatticeVerdict nested_closure_check(const std::vector<LinearCode>& level_codes) {
  LatticeVerdict v;
  v.method = CheckMethod::nested_closure;
  for (std::size_t i = 0; i + 1 < level_codes.size(); ++i) {
    if (!level_codes[i + 1].contains(level_codes[i])) {
      v.precondition_held = false;
      return v;
    }
  }
  v.precondition_held = true;
  for (std::size_t i = 0; i + 1 < level_codes.size(); ++i) {
    const auto& gens = level_codes[i].basis();
    for (std::size_t ga = 0; ga < gens.size(); ++ga) {
      for (std::size_t gb = ga; gb < gens.size(); ++gb) {
        if (!level_codes[i + 1].contains(schur(gens[ga], gens[gb]))) {
          v.is_lattice = false;
          v.witness = SchurWitness{static_cast<int>(i) + 2, gens[ga], gens[gb]};
          return v;
        }
      }
    }
  }
  v.is_lattice = true;
  return v;
}

LatticeVerdict structural_check(const LayeredCode& code) {
  const int L = code.levels();
  std::vector<LinearCode> projections;
  for (int i = 1; i <= L; ++i) projections.push_back(code.projection(i));
  std::vector<LinearCode> anti;  // anti[i] = S_{i+2}(0,..,0), i = 0..L-2
  for (int i = 2; i <= L; ++i) anti.push_back(code.antiprojection_zero(i));

  LatticeVerdict v;
  v.method = CheckMethod::structural;
  for (int i = 0; i + 1 < L; ++i) {
    if (!anti[static_cast<std::size_t>(i)].contains(projections[static_cast<std::size_t>(i)])) {
      v.precondition_held = false;
      return v;
    }
  }
  v.precondition_held = true;
  for (int i = 2; i <= L; ++i) {
    const auto& gens = projections[static_cast<std::size_t>(i - 2)].basis();
    const LinearCode& absorber = anti[static_cast<std::size_t>(i - 2)];
    for (std::size_t ga = 0; ga < gens.size(); ++ga) {
      for (std::size_t gb = ga; gb < gens.size(); ++gb) {
        if (!absorber.contains(schur(gens[ga], gens[gb]))) {
          v.is_lattice = false;
          v.witness = SchurWitness{i, gens[ga], gens[gb]};
          return v;
        }
      }
    }
  }
  v.is_lattice = true;
  return v;
}

LatticeVerdict decide_latticeness(const LayeredCode& code, std::uint64_t cap) {
  LatticeVerdict structural = structural_check(code);
  if (structural.precondition_held.value_or(false)) return structural;

  Constellation k = construction_c_star(code, cap);
  if (!k.is_explicit()) {
    LatticeVerdict undecided;
    undecided.method = CheckMethod::undecided;
    undecided.precondition_held = false;
    return undecided;
  }
  LatticeVerdict v = closure_check(k);
  v.precondition_held = false;
  return v;
}

LatticeVerdict associated_check(const LayeredCode& code) {
  LatticeVerdict structural = structural_check(code);
  if (!structural.precondition_held.value_or(false) || !structural.is_lattice.value_or(false))
    throw StructureError(
        "associated_check applies only after structural_check certifies a lattice");
  std::vector<LinearCode> projections;
  for (int i = 1; i <= code.levels(); ++i) projections.push_back(code.projection(i));
  return nested_closure_check(projections);
}

}  // namespace latcc

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "latcc/code_library.hpp"
#include "latcc/constructions.hpp"
#include "latcc/geometry.hpp"
#include "latcc/latticeness.hpp"
#include "latcc/leech.hpp"

namespace {

std::vector<latcc::BitWord> random_rows(int count, int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<latcc::BitWord> rows;
  rows.reserve(count);
  for (int r = 0; r < count; ++r) {
    latcc::BitWord w(length);
    for (int j = 0; j < length; ++j) w.set_bit(j, rng() & 1);
    rows.push_back(w);
  }
  return rows;
}

void BM_rref(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const std::vector<latcc::BitWord> rows = random_rows(64, length, 1);
  for (auto _ : state) benchmark::DoNotOptimize(latcc::rref(rows));
  state.SetComplexityN(length);
}
BENCHMARK(BM_rref)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_golay_weight_distribution(benchmark::State& state) {
  const latcc::LinearCode golay = latcc::golay24();
  for (auto _ : state) benchmark::DoNotOptimize(golay.weight_distribution());
}
BENCHMARK(BM_golay_weight_distribution);

void BM_carry_sum(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::int64_t> coord(-128, 127);
  const int n = 24, levels = 3;
  const auto decompose = [&](const latcc::Point& p) {
    latcc::Decomposition d;
    d.blocks.assign(levels, latcc::BitWord(n));
    d.translate.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < levels; ++i) d.blocks[i].set_bit(j, (p[j] >> i) & 1);
      d.translate[j] = p[j] >> levels;
    }
    return d;
  };
  std::vector<latcc::Decomposition> pool;
  for (int k = 0; k < 64; ++k) {
    latcc::Point p(n);
    for (auto& c : p) c = coord(rng);
    pool.push_back(decompose(p));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(latcc::carry_sum(pool[i % 64], pool[(i + 17) % 64]));
    ++i;
  }
}
BENCHMARK(BM_carry_sum);

void BM_closure_check(benchmark::State& state) {
  // 256-coset explicit constellation: the quadratic pair scan dominates.
  std::mt19937 rng(3);
  std::vector<latcc::BitWord> gens;
  while (true) {
    gens = random_rows(8, 9, rng());
    if (latcc::rref(gens).rank == 8) break;
  }
  const latcc::LayeredCode code(latcc::LinearCode(9, gens), 3, 3);
  const latcc::Constellation k = latcc::construction_c_star(code);
  for (auto _ : state) benchmark::DoNotOptimize(latcc::closure_check(k));
}
BENCHMARK(BM_closure_check);

void BM_structural_check(benchmark::State& state) {
  const latcc::LayeredCode code = latcc::build_leech_layered_code();
  for (auto _ : state) benchmark::DoNotOptimize(latcc::structural_check(code));
}
BENCHMARK(BM_structural_check);

void BM_leech_min_norm(benchmark::State& state) {
  const latcc::LayeredCode code = latcc::build_leech_layered_code();
  for (auto _ : state) benchmark::DoNotOptimize(latcc::leech_min_norm(code));
}
BENCHMARK(BM_leech_min_norm);

}  // namespace

BENCHMARK_MAIN();

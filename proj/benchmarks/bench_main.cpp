#include "hibi/hilbert.hpp"
#include "hibi/int_matrix.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/smoothness.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hibi;

static void BM_ChainCount(benchmark::State& state) {
  const auto L = idn(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_mult(L));
}
BENCHMARK(BM_ChainCount)->Args({2, 12})->Args({3, 9})->Args({4, 10});

static void BM_HookMult(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hook_mult(6, 14));
}
BENCHMARK(BM_HookMult);

static void BM_FaceScan(benchmark::State& state) {
  GrassmannLattice G(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_idn_faces(G, 1).faces);
}
BENCHMARK(BM_FaceScan)->Args({2, 5})->Args({3, 5})->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& r : rows)
    for (auto& x : r) x = dist(rng);
  const auto M = IntMatrix::from_rows(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(M));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12)->Arg(20);

static void BM_WindowVerdict(benchmark::State& state) {
  GrassmannLattice G(3, 8);
  const auto w = singular_window(G, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_face(G.lattice(), w.Lij).status);
}
BENCHMARK(BM_WindowVerdict);

static void BM_Hilbert(benchmark::State& state) {
  const auto I = stanley_reisner_ideal(idn(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sqfree_hilbert(I).degree);
}
BENCHMARK(BM_Hilbert)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

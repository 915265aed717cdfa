// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gridramsey/engine.hpp"
#include "gridramsey/grid.hpp"
#include "gridramsey/quasirand.hpp"
#include "gridramsey/reference.hpp"

using namespace gridramsey;

namespace {

Graph dense_graph(std::size_t n) { return random_kpartite(4, n / 4, 1, 2, 99).graph(); }

void BM_HomC4_Reference(benchmark::State& state) {
  const auto g = dense_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::hom_c4(g));
}

void BM_HomC4_Bitset(benchmark::State& state) {
  const auto g = dense_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_c4(g));
}

// r = 3 grids of this size are almost never rectangle-free, so "find" scans the full space
// only for the count kernels; use r large enough to keep rectangles rare.
void BM_CountRectangles_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(8, n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_alternating_rectangles(c));
}

void BM_CountRectangles_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(8, n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_alternating_rectangles(c));
}

void BM_FindRectangle_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(64, n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::find_alternating_rectangle(c));
}

void BM_FindRectangle_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(64, n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_alternating_rectangle(c));
}

std::vector<std::size_t> first(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

void BM_RowPattern_Reference(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(2, m, 24, 11);
  const auto tau = dichotomy_thresholds(2, m, 24, Rational{20}).rows;
  Integer need;
  mpz_cdiv_q(need.get_mpz_t(), tau.get_num_mpz_t(), tau.get_den_mpz_t());
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::first_row_pattern(c, first(m), first(24), need.get_ui()));
}

void BM_RowPattern_Parallel(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto c = random_colouring(2, m, 24, 11);
  DichotomyOptions options;
  options.constant_c = 1000;  // keep the edge side out of the measurement
  for (auto _ : state) benchmark::DoNotOptimize(dichotomy_search(c, first(m), first(24), options));
}

}  // namespace

BENCHMARK(BM_HomC4_Reference)->Arg(64)->Arg(256);
BENCHMARK(BM_HomC4_Bitset)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_CountRectangles_Reference)->Arg(32)->Arg(64);
BENCHMARK(BM_CountRectangles_Parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_FindRectangle_Reference)->Arg(32)->Arg(64);
BENCHMARK(BM_FindRectangle_Parallel)->Arg(32)->Arg(64);
BENCHMARK(BM_RowPattern_Reference)->Arg(10)->Arg(14);
BENCHMARK(BM_RowPattern_Parallel)->Arg(10)->Arg(14)->Arg(24);

BENCHMARK_MAIN();

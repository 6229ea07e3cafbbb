#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ipaac/geometry.hpp"

using namespace ipaac;

namespace {

std::vector<Cell> straddling_cells(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.2, 1.1);
  std::vector<Cell> cells;
  while (cells.size() < n) {
    const Cell c{{u(rng), u(rng)}, 0.1};
    const Patch p = intersect({{0, 0}, 1.0}, c);
    if (p.cls == CellClass::StandardPartial || p.cls == CellClass::BoundaryPartial) cells.push_back(c);
  }
  return cells;
}

void BM_IntersectPartial(benchmark::State& state) {
  const auto cells = straddling_cells(1024);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect({{0, 0}, 1.0}, cells[k++ & 1023]));
  }
}
BENCHMARK(BM_IntersectPartial);

void BM_IntersectFull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(intersect({{0, 0}, 1.0}, {{0.1, 0.1}, 0.1}));
}
BENCHMARK(BM_IntersectFull);

void BM_Oracle(benchmark::State& state) {
  const auto cells = straddling_cells(64);
  const int depth = static_cast<int>(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(intersect_oracle({{0, 0}, 1.0}, cells[k++ & 63], depth));
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();

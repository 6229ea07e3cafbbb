#include <benchmark/benchmark.h>

#include "ipaac/assembly.hpp"
#include "ipaac/manufactured.hpp"
#include "ipaac/study.hpp"

using namespace ipaac;

namespace {

void BM_BuildPatches(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  const Grid g = Grid::build(h, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(build_patches(g, 0.4, Scheme::IPAAC));
}
BENCHMARK(BM_BuildPatches)->Arg(10)->Arg(80);

void BM_Multiply(benchmark::State& state) {
  const Grid g = Grid::build(0.00625, 0.03125);
  const PatchList patches = build_patches(g, 0.03125, Scheme::IPAAC);
  const ScalarKernel k(0.03125);
  const PolyField f = make_field(CaseId::Case1);
  const DiscreteSystem sys = assemble(patches, k, f, interior_forcing(f, k, g));
  std::vector<double> x(sys.size(), 1.0);
  std::vector<double> y(sys.size());
  for (auto _ : state) {
    sys.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sys.size()));
}
BENCHMARK(BM_Multiply);

void BM_SolveScalar(benchmark::State& state) {
  SolveConfig c;
  c.h = 1.0 / static_cast<double>(state.range(0));
  c.delta = 4.0 * c.h;
  for (auto _ : state) benchmark::DoNotOptimize(solve_case(c).error);
}
BENCHMARK(BM_SolveScalar)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_SolveTensor(benchmark::State& state) {
  SolveConfig c;
  c.kernel = KernelKind::Tensor;
  c.field = CaseId::TensorQuadratic;
  c.h = 1.0 / static_cast<double>(state.range(0));
  c.delta = 0.4;
  for (auto _ : state) benchmark::DoNotOptimize(solve_case(c).error);
}
BENCHMARK(BM_SolveTensor)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

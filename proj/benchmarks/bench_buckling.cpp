#include <benchmark/benchmark.h>

#include "buckleopt/eigensolve.hpp"
#include "buckleopt/operators.hpp"
#include "buckleopt/raster.hpp"
#include "buckleopt/shapeopt.hpp"

using namespace buckleopt;

namespace {

const DomainSpec kDisk = Disk{{0, 0}, 1};

void BM_Rasterize(benchmark::State& state) {
  const double h = 2.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(kDisk, h));
  state.counters["unknowns"] = static_cast<double>(rasterize(kDisk, h).n);
}
BENCHMARK(BM_Rasterize)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_AssembleBiharmonic(benchmark::State& state) {
  const GridEmbedding g = rasterize(kDisk, 2.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_biharmonic(g));
  state.counters["unknowns"] = static_cast<double>(g.n);
}
BENCHMARK(BM_AssembleBiharmonic)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_GeneralizedSmallest(benchmark::State& state) {
  const GridEmbedding g = rasterize(kDisk, 2.0 / static_cast<double>(state.range(0)));
  const auto a = assemble_biharmonic(g);
  const auto b = assemble_laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_smallest(a, b, static_cast<int>(state.range(1))));
  state.counters["unknowns"] = static_cast<double>(g.n);
}
BENCHMARK(BM_GeneralizedSmallest)->Args({32, 1})->Args({64, 1})->Args({64, 4})->Args({128, 1})->Unit(benchmark::kMillisecond);

void BM_DenseReference(benchmark::State& state) {
  const GridEmbedding g = rasterize(kDisk, 2.0 / static_cast<double>(state.range(0)));
  const auto a = assemble_biharmonic(g);
  const auto b = assemble_laplacian(g);
  SolverOptions o;
  o.method = SolverMethod::kDense;
  for (auto _ : state) benchmark::DoNotOptimize(generalized_smallest(a, b, 1, o));
  state.counters["unknowns"] = static_cast<double>(g.n);
}
BENCHMARK(BM_DenseReference)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_ExtrapolatedRecord(benchmark::State& state) {
  const double h = 2.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(buckling_of_domain(kDisk, h, 1, true));
}
BENCHMARK(BM_ExtrapolatedRecord)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

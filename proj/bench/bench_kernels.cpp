#include "alcove/kernels.hpp"
#include "alcove/lattice_model.hpp"
#include "alcove/macdonald.hpp"

#include <benchmark/benchmark.h>

using namespace alcove;

namespace {

// (N, M) pairs: 45 states at (2,8), 56 at (3,5).
void model_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 8})->Args({3, 5});
}

ModelParams model(const benchmark::State& s) {
  return new_model(static_cast<int>(s.range(0)), static_cast<int>(s.range(1)), 0.6);
}

template <Exec E>
void BM_assemble(benchmark::State& s) {
  const auto mp = model(s);
  for (auto _ : s)
    for (int r = 1; r <= mp.N; ++r) benchmark::DoNotOptimize(kernels::assemble_plus(r, mp, E));
}

template <Exec E>
void BM_delta(benchmark::State& s) {
  const auto mp = model(s);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::delta_values(mp, E));
}

template <Exec E>
void BM_evaluate(benchmark::State& s) {
  const auto mp = model(s);
  MacdonaldFamily fam(MacParams::unit_circle(mp.N, mp.alpha, mp.g));
  std::vector<SymPoly> polys;
  std::vector<std::vector<double>> pts;
  for (const auto& lam : enumerate_alcove(mp.N, mp.M)) {
    polys.push_back(fam.poly(partition_of(lam)));
    pts.push_back(lattice_point(lam, mp));
  }
  for (auto _ : s) benchmark::DoNotOptimize(kernels::evaluate(polys, pts, mp.alpha, E));
}

template <Exec E>
void BM_wave_basis(benchmark::State& s) {
  const auto mp = model(s);
  for (auto _ : s) benchmark::DoNotOptimize(wave_basis_coefficient_route(mp, kDefaultSeed, E));
}

}  // namespace

BENCHMARK(BM_assemble<Exec::serial>)->Apply(model_args);
BENCHMARK(BM_assemble<Exec::parallel>)->Apply(model_args)->UseRealTime();
BENCHMARK(BM_delta<Exec::serial>)->Apply(model_args);
BENCHMARK(BM_delta<Exec::parallel>)->Apply(model_args)->UseRealTime();
BENCHMARK(BM_evaluate<Exec::serial>)->Apply(model_args);
BENCHMARK(BM_evaluate<Exec::parallel>)->Apply(model_args)->UseRealTime();
BENCHMARK(BM_wave_basis<Exec::serial>)->Apply(model_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wave_basis<Exec::parallel>)->Apply(model_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

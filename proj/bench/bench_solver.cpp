#include <benchmark/benchmark.h>

#include <random>

#include "sroman/generators.hpp"
#include "sroman/sierpinski.hpp"
#include "sroman/solver.hpp"

using namespace sroman;

namespace {

Graph instance(std::size_t n, std::size_t t) {
  std::mt19937_64 rng(n * 31 + t);
  return SierpinskiGraph::build(random_connected_graph(n, 0.3, rng), t).graph();
}

SolverOptions with(Execution e) {
  SolverOptions o;
  o.execution = e;
  return o;
}

void BM_GammaRSerial(benchmark::State& state) {
  auto g = instance(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_r_exact(g, with(Execution::serial)).value);
}

void BM_GammaRParallel(benchmark::State& state) {
  auto g = instance(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_r_exact(g, with(Execution::parallel)).value);
}

void BM_BruteForceSerial(benchmark::State& state) {
  std::mt19937_64 rng(state.range(0));
  auto g = random_connected_graph(state.range(0), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_gamma_r(g, with(Execution::serial)).value);
}

void BM_BruteForceParallel(benchmark::State& state) {
  std::mt19937_64 rng(state.range(0));
  auto g = random_connected_graph(state.range(0), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_gamma_r(g, with(Execution::parallel)).value);
}

}  // namespace

BENCHMARK(BM_GammaRSerial)->Args({5, 2})->Args({7, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaRParallel)->Args({5, 2})->Args({7, 2})->Args({4, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteForceSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "qnet/generators.hpp"
#include "qnet/netinfo.hpp"
#include "qnet/operators.hpp"
#include "qnet/percolation.hpp"
#include "qnet/rank.hpp"
#include "qnet/spectral.hpp"
#include "qnet/walk.hpp"

namespace {

using namespace qnet;

Graph bench_graph(Index n) {
  std::mt19937_64 rng(42);
  return generators::connected_erdos_renyi(n, 8.0 / static_cast<double>(n), rng);
}

void BM_HermitianEig(benchmark::State& state) {
  const ComplexMatrix lq = build_operators(bench_graph(state.range(0))).quantum.matrix;
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(lq));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(16, 256);

void BM_ExpmHermitian(benchmark::State& state) {
  const ComplexMatrix h = hermitian_adjacency(bench_graph(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expm_hermitian(h, Complex(0.0, -1.0)));
}
BENCHMARK(BM_ExpmHermitian)->RangeMultiplier(2)->Range(16, 256);

void BM_LongTimeAverage(benchmark::State& state) {
  const Graph g = bench_graph(state.range(0));
  const WalkSpec spec = make_walk_spec(g, GeneratorKind::Adjacency, basis_state(g.node_count(), 0), {});
  for (auto _ : state) benchmark::DoNotOptimize(long_time_average(spec));
}
BENCHMARK(BM_LongTimeAverage)->RangeMultiplier(2)->Range(16, 128);

void BM_Szegedy(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const GoogleMatrix gm = google_matrix(generators::random_directed(state.range(0), 0.2, rng), 0.85);
  for (auto _ : state) benchmark::DoNotOptimize(szegedy_rank(gm, 100));
}
BENCHMARK(BM_Szegedy)->RangeMultiplier(2)->Range(8, 64);

void BM_VonNeumannEntropy(benchmark::State& state) {
  const DensityMatrix rho = density_propagator(bench_graph(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(vn_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->RangeMultiplier(2)->Range(16, 256);

void BM_BondPercolation(benchmark::State& state) {
  const Index side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bond_percolation({side, side}, 0.5, 10, 1));
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_BondPercolation)->RangeMultiplier(2)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();

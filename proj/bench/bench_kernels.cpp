// Serial reference vs OpenMP kernel, pairwise on identical inputs.

#include "ramsey_forge/arrow.hpp"
#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/host.hpp"
#include "ramsey_forge/lf.hpp"
#include "ramsey_forge/shadow.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rf;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(gen)) g.add_edge(i, j);
  return g;
}

const Graph& dense() {
  static const Graph g = random_graph(40, 0.5, 1);
  return g;
}

const Graph& medium() {
  static const Graph g = random_graph(20, 0.6, 2);
  return g;
}

template <bool Parallel>
void BM_clique_profile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Parallel ? clique_profile(dense()) : clique_profile_serial(dense()));
}

template <bool Parallel>
void BM_independence_profile(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(Parallel ? independence_profile(dense()) : independence_profile_serial(dense()));
}

template <bool Parallel>
void BM_density(benchmark::State& st) {
  const Rational alpha(1, 10);
  for (auto _ : st)
    benchmark::DoNotOptimize(Parallel ? local_density_check(medium(), 6, alpha, DensityMode::exact())
                                      : local_density_check_serial(medium(), 6, alpha, DensityMode::exact()));
}

template <bool Parallel>
void BM_shadow(benchmark::State& st) {
  const auto fam = UniformFamily::complete_level(20, 6);
  for (auto _ : st) benchmark::DoNotOptimize(Parallel ? exact_shadow(fam, 3) : exact_shadow_serial(fam, 3));
}

template <bool Parallel>
void BM_monte_carlo(benchmark::State& st) {
  const Graph g = complete_graph(8), h = petersen_graph();
  for (auto _ : st)
    benchmark::DoNotOptimize(Parallel ? monte_carlo_blue_rate(g, h, 4, 200000, 7)
                                      : monte_carlo_blue_rate_serial(g, h, 4, 200000, 7));
}

template <bool Parallel>
void BM_good_coloring(benchmark::State& st) {
  const Graph g = complete_graph(6), h = cycle_graph(5);
  for (auto _ : st)
    benchmark::DoNotOptimize(Parallel ? find_good_coloring(g, h, 3, 3, 20000, 3)
                                      : find_good_coloring_serial(g, h, 3, 3, 20000, 3));
}

template <bool Parallel>
void BM_decompositions(benchmark::State& st) {
  const Graph f = complete_graph(5);
  for (auto _ : st)
    benchmark::DoNotOptimize(Parallel ? enumerate_decompositions(f) : enumerate_decompositions_serial(f));
}

template <bool Parallel>
void BM_arrows(benchmark::State& st) {
  const Graph g = complete_graph(9);
  for (auto _ : st) benchmark::DoNotOptimize(Parallel ? arrows_clique(g, 3, 4) : arrows_clique_serial(g, 3, 4));
}

}  // namespace

BENCHMARK(BM_clique_profile<false>)->Name("clique_profile/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_clique_profile<true>)->Name("clique_profile/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_independence_profile<false>)->Name("independence_profile/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_independence_profile<true>)->Name("independence_profile/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_density<false>)->Name("density_exact/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_density<true>)->Name("density_exact/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shadow<false>)->Name("exact_shadow/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shadow<true>)->Name("exact_shadow/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monte_carlo<false>)->Name("monte_carlo/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monte_carlo<true>)->Name("monte_carlo/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_good_coloring<false>)->Name("good_coloring/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_good_coloring<true>)->Name("good_coloring/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decompositions<false>)->Name("decompositions/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decompositions<true>)->Name("decompositions/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_arrows<false>)->Name("arrows_K9_34/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_arrows<true>)->Name("arrows_K9_34/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "plumbing/contfrac.hpp"
#include "plumbing/dinvariant.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/lattice.hpp"
#include "plumbing/recursion.hpp"

using namespace plumbing;

namespace {

// Random tree with framing -(degree + 2) at every vertex: strictly diagonally
// dominant, hence negative definite without any filtering.
PlumbingGraph random_tree(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  for (int i = 1; i < n; ++i) {
    int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.push_back({p, i});
    ++degree[p];
    ++degree[i];
  }
  std::vector<long long> weights(n);
  for (int i = 0; i < n; ++i) weights[i] = -(degree[i] + 2);
  return PlumbingGraph::from_weights(weights, edges);
}

}  // namespace

static void BM_theta_tree(benchmark::State& state) {
  auto g = random_tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(theta_tree(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_theta_tree)->Range(8, 4096)->Complexity();

static void BM_theta_oracle(benchmark::State& state) {
  auto g = random_tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(theta_oracle(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_theta_oracle)->Range(8, 64)->Complexity();

static void BM_hj_expand_fibonacci(benchmark::State& state) {
  // consecutive Fibonacci numbers: few terms, arithmetic on shrinking values
  long long a = 1, b = 1;
  while (b < state.range(0)) {
    long long t = a + b;
    a = b;
    b = t;
  }
  CoprimePair pq(b, a);
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(pq));
}
BENCHMARK(BM_hj_expand_fibonacci)->Arg(1000)->Arg(100000)->Arg(10000000);

static void BM_hj_expand_longest(benchmark::State& state) {
  // p/(p-1) expands to p-1 twos, the longest expansion for its size
  long long p = state.range(0);
  CoprimePair pq(p, p - 1);
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(pq));
}
BENCHMARK(BM_hj_expand_longest)->Arg(1000)->Arg(100000);

static void BM_dedekind_sum(benchmark::State& state) {
  Integer p = state.range(0), q = 2;
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(q, p));
}
BENCHMARK(BM_dedekind_sum)->Arg(9973)->Arg(99991)->Arg(999983);

static void BM_max_k_squared_twin_star(benchmark::State& state) {
  auto g = PlumbingGraph::from_weights({-4, -4, -4, -2, -2, -4, -4, -4},
                                       {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
  for (auto _ : state) benchmark::DoNotOptimize(max_k_squared(g));
}
BENCHMARK(BM_max_k_squared_twin_star);

static void BM_leg_closed_form(benchmark::State& state) {
  auto e = hj_expand(CoprimePair(75025, 46368));  // consecutive fibonacci
  for (auto _ : state) benchmark::DoNotOptimize(leg_closed_form(e));
}
BENCHMARK(BM_leg_closed_form);

BENCHMARK_MAIN();

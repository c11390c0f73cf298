#include <benchmark/benchmark.h>

#include <random>

#include "bullfree/cnf.hpp"
#include "bullfree/generators.hpp"
#include "bullfree/homogeneous.hpp"
#include "bullfree/independent_set.hpp"
#include "bullfree/patterns.hpp"
#include "bullfree/reduction.hpp"
#include "bullfree/solver.hpp"

namespace {

using namespace bullfree;

Trigraph sample(int n, std::uint64_t seed) {
  PairDensities d;
  d.strong_edge = 0.3;
  d.switchable = 0.1;
  d.strong_antiedge = 0.6;
  return gen_random_trigraph(n, d, true, seed);
}

CnfFormula random_formula(int vars, int clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, vars);
  CnfFormula f;
  f.num_vars = vars;
  for (int i = 0; i < clauses; ++i) {
    Clause c;
    for (auto& lit : c) lit = rng() % 2 ? var(rng) : -var(rng);
    f.clauses.push_back(c);
  }
  return f;
}

void BM_FindBull(benchmark::State& state) {
  const Trigraph t = sample(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_bull(t));
}
BENCHMARK(BM_FindBull)->Arg(16)->Arg(32)->Arg(64);

void BM_SmallPair(benchmark::State& state) {
  const Trigraph t = sample(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_small_homogeneous_pair(t));
}
BENCHMARK(BM_SmallPair)->Arg(8)->Arg(12)->Arg(16);

void BM_Decomposition(benchmark::State& state) {
  const Trigraph t = sample(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_decomposition(t));
}
BENCHMARK(BM_Decomposition)->Arg(8)->Arg(12)->Arg(16);

void BM_AlphaBranchAndBound(benchmark::State& state) {
  const Trigraph t = gen_high_girth(static_cast<int>(state.range(0)), 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_exact(t));
}
BENCHMARK(BM_AlphaBranchAndBound)->Arg(40)->Arg(60)->Arg(80);

void BM_SolveBullFree(benchmark::State& state) {
  // Triangle-free graphs are bull-free.
  const Trigraph t = gen_high_girth(static_cast<int>(state.range(0)), 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_wis(t, 1 << 20));
}
BENCHMARK(BM_SolveBullFree)->Arg(12)->Arg(20)->Arg(28);

void BM_ReduceAndVerify(benchmark::State& state) {
  const CnfFormula f = random_formula(5, static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    const auto art = reduce(f, 3);
    benchmark::DoNotOptimize(verify_instance(art));
  }
}
BENCHMARK(BM_ReduceAndVerify)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

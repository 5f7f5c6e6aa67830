// Microbenchmarks for the six greedy solvers, the exact rational type they
// lean on, and one invariant replay.  Instances come from the seeded
// generator, so every run measures identical inputs.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "apx/bin_packing.hpp"
#include "apx/center_selection.hpp"
#include "apx/generate.hpp"
#include "apx/independent_set.hpp"
#include "apx/load_balancing.hpp"
#include "apx/rational.hpp"
#include "apx/set_cover.hpp"
#include "apx/vertex_cover.hpp"

namespace {

using namespace apx;

GenParams params(const char* problem, std::uint64_t seed) {
  GenParams p;
  p.problem = problem;
  p.seed = seed;
  return p;
}

void bench_greedy_vc(benchmark::State& state) {
  GenParams p = params("vc", 1);
  p.vertices = static_cast<int>(state.range(0));
  p.edges = static_cast<int>(2 * state.range(0));
  auto h = std::get<Hypergraph>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_vc(h, PickPolicy::min_id()));
  }
}
BENCHMARK(bench_greedy_vc)->Arg(16)->Arg(64)->Arg(256);

void bench_greedy_mis(benchmark::State& state) {
  GenParams p = params("mis", 2);
  p.vertices = static_cast<int>(state.range(0));
  p.edges = static_cast<int>(3 * state.range(0));
  auto g = std::get<Graph>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_mis(g, PickPolicy::min_id()));
  }
}
BENCHMARK(bench_greedy_mis)->Arg(16)->Arg(64)->Arg(256);

void bench_greedy_balance(benchmark::State& state) {
  GenParams p = params("lb", 3);
  p.machines = 8;
  p.jobs = static_cast<int>(state.range(0));
  auto inst = std::get<LoadInstance>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_balance(inst, true));
  }
}
BENCHMARK(bench_greedy_balance)->Arg(32)->Arg(128)->Arg(512);

void bench_greedy_centers(benchmark::State& state) {
  GenParams p = params("cs", 4);
  p.sites = static_cast<int>(state.range(0));
  p.k = 5;
  auto inst = std::get<MetricInstance>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_centers(inst, PickPolicy::min_id()));
  }
}
BENCHMARK(bench_greedy_centers)->Arg(16)->Arg(64)->Arg(128);

void bench_greedy_sc(benchmark::State& state) {
  GenParams p = params("sc", 5);
  p.universe = static_cast<int>(state.range(0));
  p.subsets = static_cast<int>(state.range(0));
  auto inst = std::get<SetCoverInstance>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_sc(inst));
  }
}
BENCHMARK(bench_greedy_sc)->Arg(16)->Arg(64)->Arg(128);

void bench_greedy_bp(benchmark::State& state) {
  GenParams p = params("bp", 6);
  p.objects = static_cast<int>(state.range(0));
  auto inst = std::get<BinPackInstance>(gen_instance(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_bp(inst, PickPolicy::min_id()));
  }
}
BENCHMARK(bench_greedy_bp)->Arg(16)->Arg(64)->Arg(256);

void bench_rat_arithmetic(benchmark::State& state) {
  Rat a(355, 113), b(-22, 7);
  for (auto _ : state) {
    Rat c = a * b + a - b;
    benchmark::DoNotOptimize(c < a);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bench_rat_arithmetic);

void bench_harmonic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic(state.range(0)));
  }
}
BENCHMARK(bench_harmonic)->Arg(10)->Arg(30);

void bench_replay_vc(benchmark::State& state) {
  GenParams p = params("vc", 7);
  p.vertices = 64;
  p.edges = 128;
  auto h = std::get<Hypergraph>(gen_instance(p));
  VcResult res = greedy_vc(h, PickPolicy::min_id());
  auto inv = [&](const VcState& s) { return check_invar_vc(h, s); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay_check(res.trace, inv));
  }
}
BENCHMARK(bench_replay_vc);

}  // namespace

BENCHMARK_MAIN();

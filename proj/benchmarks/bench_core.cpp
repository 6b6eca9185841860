// Microbenchmarks for the hot paths: the zero-divisor scan, graph
// construction, metric computation, and a full check run on one ring.

#include <benchmark/benchmark.h>

#include "ntotal/graph.hpp"
#include "ntotal/ideal.hpp"
#include "ntotal/ring.hpp"
#include "ntotal/theorems.hpp"

namespace {

using ntotal::RingSpec;
using ntotal::VertexSelector;

void BM_ZeroDivisorProfileModular(benchmark::State& state) {
  const auto ring = ntotal::make_ring(
      RingSpec::modular(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(ntotal::zero_divisor_profile(ring));
}
BENCHMARK(BM_ZeroDivisorProfileModular)
    ->Arg(64)
    ->Arg(256)
    ->Arg(343)
    ->Unit(benchmark::kMicrosecond);

void BM_ZeroDivisorProfileProduct(benchmark::State& state) {
  const auto ring = ntotal::parse_ring("Z6 x Z7 x Z7");
  for (auto _ : state)
    benchmark::DoNotOptimize(ntotal::zero_divisor_profile(ring));
}
BENCHMARK(BM_ZeroDivisorProfileProduct)->Unit(benchmark::kMicrosecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto ring = ntotal::make_ring(
      RingSpec::modular(static_cast<std::uint64_t>(state.range(0))));
  const auto profile = ntotal::zero_divisor_profile(ring);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ntotal::build_graph(profile, 2, VertexSelector::All));
}
BENCHMARK(BM_BuildGraph)
    ->Arg(64)
    ->Arg(256)
    ->Arg(343)
    ->Unit(benchmark::kMicrosecond);

void BM_Diameter(benchmark::State& state) {
  const auto graph = ntotal::build_graph(
      ntotal::make_ring(
          RingSpec::modular(static_cast<std::uint64_t>(state.range(0)))),
      2, VertexSelector::All);
  for (auto _ : state) benchmark::DoNotOptimize(ntotal::diameter(graph));
}
BENCHMARK(BM_Diameter)->Arg(64)->Arg(256)->Arg(343)->Unit(
    benchmark::kMicrosecond);

void BM_Signature(benchmark::State& state) {
  const auto graph = ntotal::build_graph(
      ntotal::make_ring(RingSpec::modular(343)), 3, VertexSelector::All);
  for (auto _ : state) benchmark::DoNotOptimize(ntotal::signature(graph));
}
BENCHMARK(BM_Signature)->Unit(benchmark::kMicrosecond);

void BM_MinZdGenerators(benchmark::State& state) {
  const auto profile = ntotal::zero_divisor_profile(
      ntotal::make_ring(RingSpec::modular(96)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ntotal::min_zd_generators(profile, 6));
}
BENCHMARK(BM_MinZdGenerators)->Unit(benchmark::kMicrosecond);

void BM_RunChecks(benchmark::State& state) {
  const auto ring = ntotal::make_ring(
      RingSpec::modular(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(ntotal::run_checks(ring, 2, {}));
}
BENCHMARK(BM_RunChecks)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

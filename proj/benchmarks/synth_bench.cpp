#include <benchmark/benchmark.h>

#include <random>

#include "bgpc/fixtures.hpp"
#include "bgpc/oracles.hpp"
#include "bgpc/relu.hpp"
#include "bgpc/synth.hpp"
#include "bgpc/tropical.hpp"

using namespace bgpc;

static void BM_SynthComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synth_graphic(g));
  state.counters["size"] = static_cast<double>(synth_graphic(g).size());
}
BENCHMARK(BM_SynthComplete)->DenseRange(3, 10);

static void BM_SynthCographic(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synth_cographic(g));
}
BENCHMARK(BM_SynthCographic)->DenseRange(3, 8);

static void BM_SynthFixture(benchmark::State& state, const char* name) {
  const Tree t = make_fixture(name).tree;
  for (auto _ : state) benchmark::DoNotOptimize(synth(t));
}
BENCHMARK_CAPTURE(BM_SynthFixture, r10, "r10");
BENCHMARK_CAPTURE(BM_SynthFixture, r12, "r12");
BENCHMARK_CAPTURE(BM_SynthFixture, k4_dsum_k4, "k4-dsum-k4");

static void BM_EvalRational(benchmark::State& state) {
  const Circuit c = synth_graphic(complete_graph(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  const Assignment p = random_positive_point(c.variables(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_rational(c, p));
}
BENCHMARK(BM_EvalRational)->Arg(5)->Arg(8);

static void BM_EvalTropical(benchmark::State& state) {
  const TropicalCircuit t = tropicalize(synth_graphic(complete_graph(static_cast<int>(state.range(0)))));
  std::mt19937_64 rng(1);
  const Assignment w = random_int_point(t.variables(), rng, -50, 50);
  for (auto _ : state) benchmark::DoNotOptimize(eval_tropical(t, w));
}
BENCHMARK(BM_EvalTropical)->Arg(5)->Arg(8);

static void BM_ReluForward(benchmark::State& state) {
  const ReluNetwork net = lower_to_relu(tropicalize(synth_graphic(complete_graph(static_cast<int>(state.range(0))))));
  std::mt19937_64 rng(1);
  const Assignment w = random_int_point(net.inputs(), rng, -50, 50);
  for (auto _ : state) benchmark::DoNotOptimize(net.forward(w));
  state.counters["neurons"] = static_cast<double>(net.size());
}
BENCHMARK(BM_ReluForward)->Arg(5)->Arg(8);

BENCHMARK_MAIN();

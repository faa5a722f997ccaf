#include <benchmark/benchmark.h>

#include "stsp/suite.hpp"

using namespace stsp;

static void BM_Phi(benchmark::State& state) {
  const RingPtr R = parse_ring("Z/5[t]");
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const SteinbergWord w = random_word(R, n, rng, 32);
  for (auto _ : state) benchmark::DoNotOptimize(phi(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(w.size()));
}
BENCHMARK(BM_Phi)->Arg(3)->Arg(4)->Arg(6);

static void BM_CheckRelation(benchmark::State& state, const char* id) {
  const Relation& rel = *find_relation(id);
  SuiteConfig cfg;
  cfg.samples = 16;
  const RingPtr Z = integers();
  for (auto _ : state) benchmark::DoNotOptimize(run_relation(rel, Z, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK_CAPTURE(BM_CheckRelation, S3, "S3");
BENCHMARK_CAPTURE(BM_CheckRelation, Y13, "Y13");
BENCHMARK_CAPTURE(BM_CheckRelation, Z3, "Z3");

static void BM_ZScalar(benchmark::State& state) {
  const RingPtr R = integers();
  const RingPtr B = mixed(R, R->from_integer(2), "t");
  const auto& m = as_mixed(*B);
  const RingValue a = m.pair(R->from_integer(2), m.ambient()->zero());
  const int n = 3;
  Rng rng(3);
  const OrbitVector u = random_orbit(B, n, rng);
  const IndexedVector v = random_orthogonal(u.vector(), rng);
  const RingValue b = random_ideal_element(B, rng);
  const ZScalarData d{a, static_cast<unsigned>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(z_scalar(u, v, b, d));
}
BENCHMARK(BM_ZScalar)->Arg(0)->Arg(1)->Arg(2);

static void BM_TulenbaevT(benchmark::State& state) {
  const RingPtr B = parse_ring("B(Z,2)");
  const RingPtr Ba = localized_mixed(B);
  const auto& lb = as_localized(*Ba);
  const int n = 3;
  Rng rng(5);
  const OrbitVector u = random_orbit(Ba, n, rng);
  const IndexedVector v = random_orthogonal(u.vector(), rng);
  const TulenbaevGenerator x{u, v, lb.fraction(random_ideal_element(B, rng), 1),
                             lb.fraction(random_ideal_element(B, rng), 2), false};
  for (auto _ : state) benchmark::DoNotOptimize(tulenbaev_T(x));
}
BENCHMARK(BM_TulenbaevT);

static void BM_DilationDemo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(demo_local_global("dilation-needed"));
}
BENCHMARK(BM_DilationDemo);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cubical/adjunctions.hpp"
#include "cubical/box.hpp"
#include "cubical/hom.hpp"
#include "cubical/homology.hpp"
#include "cubical/qshape.hpp"

using namespace cubical;

static void BM_BoxEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(box_enumerate(n, n));
}
BENCHMARK(BM_BoxEnumerate)->DenseRange(1, 4);

static void BM_NormalForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& nf : nf_enumerate(n, n)) benchmark::DoNotOptimize(nf_evaluate(nf));
  }
}
BENCHMARK(BM_NormalForms)->DenseRange(1, 3);

static void BM_QObject(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_object(n, n));
}
BENCHMARK(BM_QObject)->DenseRange(1, 4);

static void BM_HomSearch(benchmark::State& state) {
  const int t = 2;
  const PresheafPtr x = q_object_ptr(static_cast<int>(state.range(0)), t);
  const PresheafPtr y = q_object_ptr(2, t);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(x, y));
}
BENCHMARK(BM_HomSearch)->DenseRange(0, 2);

static void BM_ApplyQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PresheafPtr x = share(representable(Flavor::simplicial, n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(apply_Q(x, 3));
}
BENCHMARK(BM_ApplyQ)->DenseRange(0, 3);

static void BM_Homology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PresheafPtr x = triangulate(share(representable(Flavor::cubical, n, n + 1)), n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(homology(*x, true));
}
BENCHMARK(BM_Homology)->DenseRange(1, 3);
BENCHMARK_MAIN();

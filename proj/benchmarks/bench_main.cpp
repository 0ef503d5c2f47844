#include <benchmark/benchmark.h>

#include "pa/ideal.hpp"
#include "pa/idempotent.hpp"
#include "pa/schurweyl.hpp"

using namespace pa;

static void BM_MulOrbitAllPairs(benchmark::State &state) {
  const Level level = Level::integer(static_cast<int>(state.range(0)));
  auto all = enumerate(level);
  std::vector<Element> xs;
  for (const auto &p : all)
    xs.push_back(Element::single(level, Basis::Orbit, Scalar(5), p));
  for (auto _ : state)
    for (std::size_t i = 0; i < xs.size(); i += 7)
      for (std::size_t j = 0; j < xs.size(); j += 5)
        benchmark::DoNotOptimize(mul_orbit(xs[i], xs[j]));
}
BENCHMARK(BM_MulOrbitAllPairs)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MulDiagramAllPairs(benchmark::State &state) {
  const Level level = Level::integer(static_cast<int>(state.range(0)));
  auto all = enumerate(level);
  for (auto _ : state)
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 5) {
        int removed = 0;
        benchmark::DoNotOptimize(compose(all[i], all[j], removed));
      }
}
BENCHMARK(BM_MulDiagramAllPairs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ToOrbit(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  Element d = Element::single(Level::integer(k), Basis::Diagram, Scalar(3), singletons_partition(k));
  for (auto _ : state)
    benchmark::DoNotOptimize(to_orbit(d));
}
BENCHMARK(BM_ToOrbit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PhiXi(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  Element x = xi(k, 2 * k);
  for (auto _ : state)
    benchmark::DoNotOptimize(phi(x, 2 * k));
}
BENCHMARK(BM_PhiXi)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EnnClosure(benchmark::State &state) {
  const Level level = Level::integer(3);
  const int n = static_cast<int>(state.range(0));
  Element g = enn_generator(level, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_closure({g}, level, n));
}
BENCHMARK(BM_EnnClosure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ordforge/bachmann.hpp"
#include "ordforge/epsilon.hpp"
#include "ordforge/exp2.hpp"
#include "ordforge/harness.hpp"

namespace {

using namespace ordforge;

void BM_EnumerateExp2(benchmark::State& state) {
  BaseOrder x = BaseOrder::finite(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exp2(x));
}
BENCHMARK(BM_EnumerateExp2)->Arg(6)->Arg(10)->Arg(12);

void BM_EnumerateEps(benchmark::State& state) {
  BaseOrder x = BaseOrder::finite(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_eps(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateEps)->Arg(4)->Arg(5)->Arg(6);

void BM_CompareEps(benchmark::State& state) {
  BaseOrder x = BaseOrder::finite(1);
  auto ts = enumerate_eps(x, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& a : ts)
      for (const auto& b : ts) benchmark::DoNotOptimize(compare_eps(x, a, b));
}
BENCHMARK(BM_CompareEps)->Arg(4)->Arg(5);

void BM_EnumerateTheta(benchmark::State& state) {
  ThetaContext ctx = ThetaContext::plain();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_theta(ctx, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTheta)->Arg(3)->Arg(4)->Arg(5);

void BM_OrderAxioms(benchmark::State& state) {
  const SystemInfo& sys = find_system("eps");
  BaseOrder x = BaseOrder::finite(1);
  Fragment frag = build_fragment(sys, x, static_cast<int>(state.range(0)));
  auto cmp = [&](const TermPtr& a, const TermPtr& b) {
    return sys.compare(x, a, b);
  };
  for (auto _ : state) benchmark::DoNotOptimize(check_order_axioms(frag, cmp));
}
BENCHMARK(BM_OrderAxioms)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "asynum/parse.hpp"
#include "asynum/pointset.hpp"
#include "asynum/ramsey.hpp"

using namespace asynum;

namespace {

FiniteNatSet first(std::int64_t n) {
  std::vector<std::uint64_t> v;
  for (std::int64_t i = 0; i < n; ++i) v.push_back(static_cast<std::uint64_t>(i));
  return FiniteNatSet(v);
}

template <RamseyEngine::Strategy S, bool Parallel>
void BM_nu(benchmark::State& state) {
  const auto a = first(state.range(0));
  for (auto _ : state) {
    RamseyEngine engine(S, Parallel);  // fresh memo every iteration
    WorkBudget budget(std::uint64_t{1} << 62);
    benchmark::DoNotOptimize(engine.nu(a, budget));
  }
}

BENCHMARK(BM_nu<RamseyEngine::Strategy::Naive, false>)->DenseRange(6, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nu<RamseyEngine::Strategy::Pruned, false>)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nu<RamseyEngine::Strategy::Pruned, true>)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

const char* kExpr = "(ap(0,2) | range(3,40)) * (N \\ ap(1,3)) * lift((2), ap(0,5) & range(0,50))";

void BM_counts_parallel(benchmark::State& state) {
  const auto plan = *CountingPlan::build(parse_expr(kExpr));
  for (auto _ : state) benchmark::DoNotOptimize(plan.counts(static_cast<std::uint64_t>(state.range(0))));
}

void BM_counts_serial(benchmark::State& state) {
  const auto plan = *CountingPlan::build(parse_expr(kExpr));
  for (auto _ : state)
    for (std::int64_t n = 0; n <= state.range(0); ++n)
      benchmark::DoNotOptimize(plan.count(static_cast<std::uint64_t>(n)));
}

void BM_counts_enumeration(benchmark::State& state) {
  const auto e = parse_expr(kExpr);
  for (auto _ : state) {
    WorkBudget budget(std::uint64_t{1} << 62);
    for (std::int64_t n = 0; n <= state.range(0); ++n)
      benchmark::DoNotOptimize(count_by_enumeration(e, static_cast<std::uint64_t>(n), budget));
  }
}

BENCHMARK(BM_counts_parallel)->Arg(16)->Arg(256)->Arg(4096);
BENCHMARK(BM_counts_serial)->Arg(16)->Arg(256)->Arg(4096);
BENCHMARK(BM_counts_enumeration)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

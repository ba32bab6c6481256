#include <benchmark/benchmark.h>

#include <vector>

#include "rankone/bijection.hpp"
#include "rankone/enumeration.hpp"

namespace {

using namespace rankone;

std::vector<CycleDecomposition> all_derangements(std::size_t n) {
  std::vector<CycleDecomposition> out;
  DerangementStream s(n);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<MarkedTree> all_marked(std::size_t n) {
  std::vector<MarkedTree> out;
  MarkedTreeStream s(n);
  while (auto mt = s.next()) out.push_back(std::move(*mt));
  return out;
}

void BM_ForwardAll(benchmark::State& state) {
  const auto input = all_derangements(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& p : input) benchmark::DoNotOptimize(forward(p));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(input.size()));
}
BENCHMARK(BM_ForwardAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_InverseAll(benchmark::State& state) {
  const auto input = all_marked(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& mt : input) benchmark::DoNotOptimize(inverse(mt));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(input.size()));
}
BENCHMARK(BM_InverseAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_MarkedTreeStream(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    MarkedTreeStream s(n);
    std::size_t count = 0;
    while (s.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MarkedTreeStream)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_VerifyBijection(benchmark::State& state) {
  VerifyOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_bijection(static_cast<std::size_t>(state.range(0)), opts));
  }
}
BENCHMARK(BM_VerifyBijection)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

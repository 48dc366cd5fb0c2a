#include <benchmark/benchmark.h>

#include "lcsgap/graph.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"
#include "lcsgap/rng.hpp"

using namespace lcsgap;

namespace {

Sequence random_string(Rng& rng, int sigma, std::size_t len) {
  Sequence s(len);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
  return s;
}

void BM_LcsBitParallel(benchmark::State& state) {
  Rng rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_string(rng, 256, len), b = random_string(rng, 256, len);
  for (auto _ : state) benchmark::DoNotOptimize(lcs_length(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsBitParallel)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

void BM_LcsQuadraticDp(benchmark::State& state) {
  Rng rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_string(rng, 256, len), b = random_string(rng, 256, len);
  for (auto _ : state) benchmark::DoNotOptimize(lcs_length_dp(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsQuadraticDp)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

// Three strings of the given length over a 4-letter alphabet.
void BM_ProductDp(benchmark::State& state) {
  Rng rng(2);
  const auto len = static_cast<std::size_t>(state.range(0));
  const std::vector<Sequence> strings{random_string(rng, 4, len), random_string(rng, 4, len),
                                      random_string(rng, 4, len)};
  for (auto _ : state) benchmark::DoNotOptimize(multi_lcs_product_dp(strings).length);
}
BENCHMARK(BM_ProductDp)->DenseRange(10, 50, 10);

void BM_SubsetEnum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = jiang_li(erdos_renyi(n, 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(multi_lcs_subset_enum(inst).length);
}
BENCHMARK(BM_SubsetEnum)->DenseRange(8, 20, 4);

void BM_Heuristic(benchmark::State& state) {
  const auto inst = jiang_li(erdos_renyi(16, 0.5, 4));
  const auto strings = inst.all_strings();
  for (auto _ : state)
    benchmark::DoNotOptimize(heuristic_multi_lcs(strings, static_cast<std::uint64_t>(state.range(0)), 5).length);
}
BENCHMARK(BM_Heuristic)->Arg(1000)->Arg(10000);

}  // namespace

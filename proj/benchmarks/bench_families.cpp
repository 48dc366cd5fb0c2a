#include <benchmark/benchmark.h>

#include "lcsgap/families.hpp"
#include "lcsgap/rng.hpp"

using namespace lcsgap;

namespace {

// Sampling plus all-pairs certification.
void BM_RandomFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(random_family(n, Rational(1, 4), 256, 512, ++seed, 3).attempts);
  state.SetLabel("m=512 sigma=256");
}
BENCHMARK(BM_RandomFamily)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_GreedyFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(greedy_family(n, Rational(1, 2), 64, 128).strings.size());
}
BENCHMARK(BM_GreedyFamily)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

// Distinct symbols: no violation, so the full scan runs.
void BM_VerifySyncDistinct(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  Sequence s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<Symbol>(i);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_sync_string(s, Rational(2), Rational(1, 4)).cells);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifySyncDistinct)->RangeMultiplier(2)->Range(16, 128)->Complexity()
    ->Unit(benchmark::kMillisecond);

}  // namespace

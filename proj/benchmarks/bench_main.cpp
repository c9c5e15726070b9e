#include <benchmark/benchmark.h>

#include "cubic_orbit/closed_form.hpp"

using namespace cubic_orbit;

namespace {

const SystemParams kDistinct{2, 1, 1, 2};
const SystemParams kIrrational{3, 1, 1, 1};
const SystemParams kRepeated{3, 1, -1, 1};
const SystemParams kAntitrace{1, 1, 1, -1};
const InitialPair kInit{1, 2};

void BM_PowerDistinct(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(kIrrational, n));
}
BENCHMARK(BM_PowerDistinct)->RangeMultiplier(4)->Range(4, 1024);

void BM_PowerRepeated(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(kRepeated, n));
}
BENCHMARK(BM_PowerRepeated)->RangeMultiplier(4)->Range(4, 1024);

void BM_SolveFactored(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_case(kDistinct, kInit, n));
}
BENCHMARK(BM_SolveFactored)->DenseRange(2, 20, 6);

void BM_SolveAntitrace(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_antitrace(kAntitrace, kInit, n));
}
BENCHMARK(BM_SolveAntitrace)->Arg(10)->Arg(100)->Arg(1000);

void BM_IterateDirect(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_direct(kDistinct, kInit, n));
}
BENCHMARK(BM_IterateDirect)->DenseRange(2, 8, 2);

void BM_FactoredEqual(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const OrbitTerm closed = solve_case(kDistinct, kInit, n);
  const OrbitTerm recon = reconstruct_general(kDistinct, kInit, n);
  for (auto _ : state) benchmark::DoNotOptimize(factored_equal(closed.x, recon.x));
}
BENCHMARK(BM_FactoredEqual)->DenseRange(4, 16, 4);

void BM_ZeroSetIrrational(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zero_set_member(kIrrational, kInit));
}
BENCHMARK(BM_ZeroSetIrrational);

}  // namespace
BENCHMARK_MAIN();

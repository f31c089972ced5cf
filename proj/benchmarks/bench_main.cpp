#include <benchmark/benchmark.h>

#include "kuga/feasibility.hpp"
#include "kuga/formulas.hpp"
#include "kuga/rational.hpp"

#include <random>
#include <vector>

namespace {

void BM_RationalArithmetic(benchmark::State &state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> num(-100000, 100000);
  std::uniform_int_distribution<long long> den(1, 4096);
  std::vector<kuga::Rational> values;
  for (int k = 0; k < 256; ++k)
    values.emplace_back(num(rng), den(rng));
  for (auto _ : state) {
    kuga::Rational acc(0);
    for (std::size_t k = 0; k + 1 < values.size(); k += 2)
      acc += values[k] * values[k + 1];
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalArithmetic);

void BM_ChDegree(benchmark::State &state) {
  const long long g = state.range(0);
  std::vector<long long> delta(static_cast<std::size_t>(g / 2) + 1, 3);
  std::vector<long long> xi(static_cast<std::size_t>((g - 1) / 2) + 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kuga::ch_degree(g, delta, xi));
    benchmark::DoNotOptimize(kuga::ch_omega_sq(g, delta, xi));
  }
}
BENCHMARK(BM_ChDegree)->Arg(10)->Arg(30)->Arg(50);

void BM_DecideNonCompact(benchmark::State &state) {
  const kuga::Scenario s{state.range(0), 1, kuga::FamilyKind::HyperellipticKuga,
                         kuga::DeltaNcState::NonEmpty, kuga::AlbaneseRegime::Unrestricted};
  for (auto _ : state)
    benchmark::DoNotOptimize(kuga::decide(s));
}
BENCHMARK(BM_DecideNonCompact)->Arg(8)->Arg(20)->Arg(40);

void BM_ScanRow(benchmark::State &state) {
  const long long g = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kuga::genus_scan(kuga::FamilyKind::HyperellipticKuga, g, g, kuga::NcRegime::All));
}
BENCHMARK(BM_ScanRow)->Arg(10)->Arg(25)->Arg(50);

} // namespace

BENCHMARK_MAIN();

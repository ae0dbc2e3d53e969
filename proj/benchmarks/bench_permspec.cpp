#include <random>

#include <benchmark/benchmark.h>

#include "permspec/circulant.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/parity.hpp"
#include "permspec/permanent.hpp"
#include "permspec/spectrum.hpp"
#include "permspec/upper.hpp"

using namespace permspec;

namespace {

WeightedMatrix random_weighted(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  WeightedMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = exact(num(rng), den(rng));
  return m;
}

BinaryMatrix three_regular(std::size_t n) {
  return BinaryMatrix::identity(n) | power_matrix(n, 1) | power_matrix(n, 3);
}

void BM_RyserRational(benchmark::State& state) {
  const auto m = random_weighted(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(m));
}
BENCHMARK(BM_RyserRational)->DenseRange(4, 12, 4);

void BM_ExpansionRational(benchmark::State& state) {
  const auto m = random_weighted(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_expansion(m));
}
BENCHMARK(BM_ExpansionRational)->DenseRange(4, 12, 4);

void BM_BinaryPermanent(benchmark::State& state) {
  const auto m = three_regular(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_BinaryPermanent)->Arg(8)->Arg(16)->Arg(20)->Arg(24);

void BM_ScanDiagonal(benchmark::State& state) {
  EnumerationTask task;
  task.n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(scan(task).count);
}
BENCHMARK(BM_ScanDiagonal)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_SymmetricSpectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_symmetric(state.range(0)).size());
}
BENCHMARK(BM_SymmetricSpectrum)->Arg(30)->Arg(60);

void BM_UpperSymmetric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(upper_symmetric(state.range(0), 2).values.size());
}
BENCHMARK(BM_UpperSymmetric)->Arg(24)->Arg(48);

void BM_ParityRyser(benchmark::State& state) {
  const auto m = three_regular(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parity_ryser(m).odd);
}
BENCHMARK(BM_ParityRyser)->Arg(9)->Arg(12)->Arg(15);

void BM_CirculantReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(circulant_report(state.range(0)).spectrum.size());
}
BENCHMARK(BM_CirculantReport)->Arg(14)->Arg(20);

}  // namespace
BENCHMARK_MAIN();

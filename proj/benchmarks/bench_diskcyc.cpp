#include <benchmark/benchmark.h>

#include <random>

#include "diskcyc/criteria.hpp"
#include "diskcyc/orbit.hpp"
#include "diskcyc/spectral.hpp"

namespace {

using namespace diskcyc;

WeightSequence mixed_weights() {
  WeightSequence::Table table;
  table[-2] = Complex{1.4, 0.0};
  table[-1] = Complex{0.7, 0.0};
  table[0] = Complex{2.5, 0.0};
  table[1] = Complex{0.9, 0.0};
  return WeightSequence{Complex{3.0, 0.0}, Complex{2.0, 0.0}, std::move(table)};
}

void BM_LogWindowProduct(benchmark::State& state) {
  const WeightSequence ws = mixed_weights();
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(criteria::log_window_product(ws, -n / 2, n));
  }
}
BENCHMARK(BM_LogWindowProduct)->Arg(64)->Arg(512);

void BM_ForwardBilateralVerdict(benchmark::State& state) {
  const WeightSequence ws = mixed_weights();
  criteria::CriterionConfig cfg;
  cfg.horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(criteria::forward_bilateral_verdict(ws, cfg));
  }
}
BENCHMARK(BM_ForwardBilateralVerdict)->Arg(200)->Arg(400);

void BM_WitnessSearch(benchmark::State& state) {
  const auto op = ShiftOperator::unilateral_backward(
      WeightSequence::constant(Complex{2.0, 0.0}, Sidedness::OneSidedNonNegative));
  const SparseVector x = SparseVector::basis(40);
  const SparseVector y = SparseVector::basis(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit::witness_search(op, x, y, state.range(0), 1e-9));
  }
}
BENCHMARK(BM_WitnessSearch)->Arg(50)->Arg(200);

void BM_OptimalDiskCoefficient(benchmark::State& state) {
  std::mt19937_64 rng{7};
  std::uniform_real_distribution<double> coeff{-2.0, 2.0};
  SparseVector v;
  SparseVector y;
  for (long i = 0; i < 8; ++i) {
    v.set(i, Complex{coeff(rng), coeff(rng)});
    y.set(i, Complex{coeff(rng), coeff(rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit::optimal_disk_coefficient(v, y));
  }
}
BENCHMARK(BM_OptimalDiskCoefficient);

void BM_OuterRadiusEstimate(benchmark::State& state) {
  const WeightSequence ws = mixed_weights();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral::outer_radius_estimate(ws, state.range(0)));
  }
}
BENCHMARK(BM_OuterRadiusEstimate)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();

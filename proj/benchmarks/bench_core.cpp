#include <benchmark/benchmark.h>

#include <numbers>

#include "spt/gamow.hpp"
#include "spt/proper_time_kernel.hpp"
#include "spt/quadrature.hpp"
#include "spt/semiclassics.hpp"

using namespace spt;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureSpec kSpec{};

void BM_AdaptiveQuadOscillatory(benchmark::State& state) {
  const auto f = [](double x) {
    return std::exp(Complex(0.0, x)) / (1.0 + x * x);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(adaptive_quad(f, 0.0, 10.0 * kPi, kSpec).value);
  }
}
BENCHMARK(BM_AdaptiveQuadOscillatory);

void BM_MehlerKernel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mehler_kernel(0.3, -0.2, 0.5, 1.0));
  }
}
BENCHMARK(BM_MehlerKernel);

void BM_SpectralSum(benchmark::State& state) {
  const SpectralTruncation trunc{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_kernel_sum(0.3, -0.2, 0.5, 1.0, trunc));
  }
}
BENCHMARK(BM_SpectralSum)->Arg(10)->Arg(40);

void BM_BilinearPairing(benchmark::State& state) {
  const RayContour contour{-kPi / 4.0, 12.0};
  const GamowMode bra{5, Branch::Growing, 1.0};
  const GamowMode ket{5, Branch::Decaying, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bilinear_pairing(bra, ket, contour, kSpec));
  }
}
BENCHMARK(BM_BilinearPairing);

void BM_EfflagImagQuadrature(benchmark::State& state) {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(efflag_imag_quadrature(cfg, kSpec));
  }
}
BENCHMARK(BM_EfflagImagQuadrature);

void BM_RateSeries(benchmark::State& state) {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_rate_residues(cfg, 5).total());
  }
}
BENCHMARK(BM_RateSeries);

void BM_Trajectory(benchmark::State& state) {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  const TrajectoryState init = hyperbola_initial_state(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_trajectory(init, 5.0, 1e-3, cfg));
  }
}
BENCHMARK(BM_Trajectory);

}  // namespace

BENCHMARK_MAIN();

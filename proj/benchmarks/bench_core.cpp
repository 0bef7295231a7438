#include <benchmark/benchmark.h>

#include <numbers>

#include "wavetraj/classifier.hpp"
#include "wavetraj/elliptic.hpp"
#include "wavetraj/irrotational.hpp"
#include "wavetraj/oracle.hpp"
#include "wavetraj/vorticity.hpp"

namespace {

using namespace wavetraj;

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void BM_EllipticK(benchmark::State& state) {
  double m = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_K(m));
    m = m < 0.9 ? m + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_EllipticK);

void BM_EllipticF(benchmark::State& state) {
  double phi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_F(phi, 0.37));
    phi = phi < 1.4 ? phi + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_EllipticF);

void BM_JacobiSn(benchmark::State& state) {
  double u = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_sn(u, 0.61));
    u = u < 3.0 ? u + 1e-4 : -3.0;
  }
}
BENCHMARK(BM_JacobiSn);

void BM_OrbitPeriodQuadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_period_quadrature(5.0 * kPiSq, 0.7));
}
BENCHMARK(BM_OrbitPeriodQuadrature);

void BM_OrbitPeriodElliptic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_period_elliptic(5.0 * kPiSq, 0.7));
}
BENCHMARK(BM_OrbitPeriodElliptic);

void BM_IntegrateOrbit(benchmark::State& state) {
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const double tMax = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_orbit(cfg, {0.5, 0.5}, tMax, 1e-4));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tMax / 1e-4));
}
BENCHMARK(BM_IntegrateOrbit)->Arg(1)->Arg(5);

void BM_IntegrateRaw(benchmark::State& state) {
  const FlowConfig cfg = FlowConfig::with_shear(2.0, -1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_raw(cfg, {0.5, 0.5}, 3.0, 1e-10, 512));
}
BENCHMARK(BM_IntegrateRaw);

void BM_Classify(benchmark::State& state) {
  const FlowConfig cfg = FlowConfig::with_shear(0.5, -0.54);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(cfg, {0.5, 0.5}, /*resolveFallback=*/false));
}
BENCHMARK(BM_Classify);

void BM_ZeroCurrentSample(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(trajectory_zero_current({0.5, 0.5}, 2.0, 2001));
}
BENCHMARK(BM_ZeroCurrentSample);

void BM_OutsideBandSample(benchmark::State& state) {
  const FlowConfig cfg = FlowConfig::irrotational(3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(trajectory_outside_band(cfg, {0.5, 0.5}, 2.0, 2001));
}
BENCHMARK(BM_OutsideBandSample);

}  // namespace

BENCHMARK_MAIN();

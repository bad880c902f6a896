#include <benchmark/benchmark.h>

#include "ncopt/channel.hpp"
#include "ncopt/montecarlo.hpp"
#include "ncopt/outage.hpp"
#include "ncopt/power_alloc.hpp"
#include "ncopt/solver.hpp"

namespace {

ncopt::ProblemInstance highway_instance(std::size_t users) {
  std::vector<double> omega{10.0, 5.0, 1.0, 0.5};
  omega.resize(users);
  const double rho = 10.0;
  ncopt::ChannelParams channel{5.9e9, 41.6667, 1e-6, 0.1,
                               ncopt::CsiConvention::Swapped};
  const ncopt::CsiCoefficients coeffs = ncopt::csi_coefficients(
      ncopt::jakes_phi(channel), channel.omega_eps, rho, channel.convention);
  return ncopt::ProblemInstance::nominal(ncopt::UserGains(std::move(omega)), coeffs,
                                         ncopt::MulticastQos{0.3, 0.1}, 0.2, rho,
                                         ncopt::zipf_popularity(10, 1.0), 2.0, 5.0);
}

void BM_BesselJ0(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncopt::bessel_j0(x));
    x += 1e-3;
    if (x > 10.0) x = 0.0;
  }
}
BENCHMARK(BM_BesselJ0);

void BM_MinPowerClosedForm(benchmark::State& state) {
  const std::vector<double> lambda{10.0, 7.0, 5.0, 2.0, 1.0, 0.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(ncopt::min_power_closed_form(0.4, lambda, 1.7));
}
BENCHMARK(BM_MinPowerClosedForm);

void BM_OutageMonteCarlo(benchmark::State& state) {
  const auto instance = highway_instance(2);
  const ncopt::PowerSplit split = ncopt::PowerSplit::from_snr(6.0, {3.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncopt::outage_monte_carlo(
        instance.qos, split, 5.0, instance.coeffs,
        static_cast<std::size_t>(state.range(0)), 42));
  }
}
BENCHMARK(BM_OutageMonteCarlo)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_SolveAlternating(benchmark::State& state) {
  const auto instance = highway_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ncopt::solve_alternating(instance));
}
BENCHMARK(BM_SolveAlternating)->Arg(2)->Arg(3)->Arg(4);

void BM_SweepRmin(benchmark::State& state) {
  const auto instance = highway_instance(2);
  std::vector<double> grid(10);
  for (int i = 0; i < 10; ++i) grid[i] = 0.1 * (i + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(ncopt::sweep_rmin(instance, grid, {}, true, 1));
}
BENCHMARK(BM_SweepRmin)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "xyq/dqpt.hpp"
#include "xyq/observables.hpp"
#include "xyq/oracle.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
const xyq::QuenchSpec kQuench{{1.5, 1.0}, {0.5, 1.0}};
const xyq::SqueezeSpec kSqueeze{0.5, kPi / 3};

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

void BM_BogoliubovAngle(benchmark::State& state) {
  double k = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::bogoliubov_angle(k, kQuench.post));
    k += 1e-9;
  }
}
BENCHMARK(BM_BogoliubovAngle);

void BM_ModeQuenchData(benchmark::State& state) {
  double k = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::mode_quench_data(k, kQuench, kSqueeze));
    k += 1e-9;
  }
}
BENCHMARK(BM_ModeQuenchData);

void BM_RateFunction(benchmark::State& state) {
  const auto grid = xyq::build_grid(static_cast<int>(state.range(0)));
  const auto times = linspace(0.0, 8.0, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::rate_function(kQuench, kSqueeze, grid, times));
  }
  state.SetItemsProcessed(state.iterations() * grid.size() * times.size());
}
BENCHMARK(BM_RateFunction)->Arg(500)->Arg(2000)->Arg(8000);

void BM_DeltaCriterion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        xyq::delta_criterion(kQuench, kSqueeze, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DeltaCriterion)->Arg(1024)->Arg(4096);

void BM_DeltaScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rs = linspace(0.0, kPi / 2, n);
  const auto ps = linspace(-kPi, kPi, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::delta_scan(kQuench, rs, ps, 1024));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DeltaScan)->Arg(16)->Arg(32);

void BM_CriticalMomenta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::critical_momenta(kQuench, kSqueeze));
  }
}
BENCHMARK(BM_CriticalMomenta);

void BM_FockModeOracle(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::fock_mode_oracle(1.1, kQuench, kSqueeze, t));
    t += 0.01;
  }
}
BENCHMARK(BM_FockModeOracle);

void BM_PairingAmplitude(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::pairing_amplitude(static_cast<int>(state.range(0)),
                                                    kQuench.pre));
  }
}
BENCHMARK(BM_PairingAmplitude)->Arg(1)->Arg(16);

void BM_DtopWinding(benchmark::State& state) {
  const auto grid = xyq::build_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::dtop_winding(kQuench, {0.0, 0.0}, 3.0, grid));
  }
}
BENCHMARK(BM_DtopWinding)->Arg(2000);

void BM_SpinEdRate(benchmark::State& state) {
  const auto times = linspace(0.0, 3.0, 32);
  const int n_sites = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xyq::spin_ed_rate(kQuench, kSqueeze, times, n_sites));
  }
}
BENCHMARK(BM_SpinEdRate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <vector>

#include <benchmark/benchmark.h>

#include "tpmi/decomposition.hpp"
#include "tpmi/oracle.hpp"
#include "tpmi/presets.hpp"
#include "tpmi/scan.hpp"

namespace {

void scan_args(benchmark::internal::Benchmark* b) {
  for (int n : {256, 2048, 16384})
    b->Arg(n);
}

template <bool Serial>
void BM_ScanG2(benchmark::State& state) {
  const tpmi::TwoPhotonModel model(tpmi::preset("fig3a"));
  const auto delays = model.config().scan.resampled(state.range(0)).delays();
  std::vector<double> out(delays.size());
  for (auto _ : state) {
    if constexpr (Serial)
      tpmi::scan_g2_serial(model, delays, out);
    else
      tpmi::scan_g2(model, delays, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanG2<true>)->Name("scan_g2/serial")->Apply(scan_args);
BENCHMARK(BM_ScanG2<false>)->Name("scan_g2/parallel")->Apply(scan_args);

template <bool Serial>
void BM_FullScan(benchmark::State& state) {
  const auto config = tpmi::preset("fig4");
  for (auto _ : state) {
    auto trace = Serial ? tpmi::run_scan_serial(config) : tpmi::run_scan(config);
    benchmark::DoNotOptimize(trace.rows.data());
  }
}
BENCHMARK(BM_FullScan<true>)->Name("run_scan/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullScan<false>)->Name("run_scan/parallel")->Unit(benchmark::kMillisecond);

template <bool Serial>
void BM_Oracle(benchmark::State& state) {
  const auto config = tpmi::preset("fig5");
  const auto delays = config.scan.resampled(16).delays();
  const auto r = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto run = Serial ? tpmi::run_oracle_serial(config, delays, r, 7)
                      : tpmi::run_oracle(config, delays, r, 7);
    benchmark::DoNotOptimize(run.estimates.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 16);
}
BENCHMARK(BM_Oracle<true>)->Name("oracle/serial")->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle<false>)->Name("oracle/parallel")->Arg(10000)->Unit(benchmark::kMillisecond);

template <bool Serial>
void BM_Spectrum(benchmark::State& state) {
  std::vector<double> x(2048);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<double>(i % 17) - 8.0;
  for (auto _ : state) {
    auto mag = tpmi::magnitude_spectrum(x, 4 * x.size(), Serial);
    benchmark::DoNotOptimize(mag.data());
  }
}
BENCHMARK(BM_Spectrum<true>)->Name("magnitude_spectrum/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum<false>)->Name("magnitude_spectrum/parallel")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#include "tpmi/scan.hpp"

#include <cstddef>

#include "tpmi/decomposition.hpp"
#include "tpmi/errors.hpp"

namespace tpmi {

void scan_g2(const TwoPhotonModel& model, std::span<const double> delays,
             std::span<double> out) {
  const double norm = model.normalization();
  const auto n = static_cast<std::ptrdiff_t>(delays.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = model.raw_signal(delays[i]) / norm;
}

void scan_g2_serial(const TwoPhotonModel& model, std::span<const double> delays,
                    std::span<double> out) {
  const double norm = model.normalization();
  for (std::size_t i = 0; i < delays.size(); ++i)
    out[i] = model.raw_signal(delays[i]) / norm;
}

namespace {

ScanRow make_row(const TwoPhotonModel& model, double norm, double delay) {
  const auto b = classify(model, delay);
  ScanRow row;
  row.delay = delay;
  row.background = b.background / norm;
  row.hbt = b.hbt / norm;
  row.omega = b.omega / norm;
  row.two_omega = b.two_omega / norm;
  row.g2 = model.raw_signal(delay) / norm;
  return row;
}

ScanTrace scan_impl(const InterferometerConfig& config, bool serial) {
  config.validate();
  const TwoPhotonModel model(config);
  double norm = 0.0;
  try {
    norm = model.normalization();
  } catch (const DegenerateNormalization& e) {
    throw DegenerateNormalization(std::string(e.what()) +
                                  "; check the arm polarizer against p0/p3");
  }
  const auto delays = config.scan.delays();
  ScanTrace trace;
  trace.config = config;
  trace.rows.resize(delays.size());
  const auto n = static_cast<std::ptrdiff_t>(delays.size());
  if (serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      trace.rows[i] = make_row(model, norm, delays[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      trace.rows[i] = make_row(model, norm, delays[i]);
  }
  return trace;
}

} // namespace

ScanTrace run_scan(const InterferometerConfig& config) { return scan_impl(config, false); }

ScanTrace run_scan_serial(const InterferometerConfig& config) {
  return scan_impl(config, true);
}

} // namespace tpmi

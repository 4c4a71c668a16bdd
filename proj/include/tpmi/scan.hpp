#pragma once

#include <span>
#include <string>
#include <vector>

#include "tpmi/config.hpp"
#include "tpmi/engine.hpp"

namespace tpmi {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// One delay of a scan. Component columns are normalized like g2 and sum to it.
struct ScanRow {
  double delay = 0.0; // seconds
  double g2 = 0.0;
  double background = 0.0;
  double hbt = 0.0;
  double omega = 0.0;
  double two_omega = 0.0;
};

struct ScanTrace {
  InterferometerConfig config;
  std::string version = kLibraryVersion;
  std::vector<ScanRow> rows;
};

/// g² over `delays` into `out` (same length). OpenMP-parallel over delays;
/// each slot is written independently so the result matches the serial loop
/// bit for bit.
void scan_g2(const TwoPhotonModel& model, std::span<const double> delays,
             std::span<double> out);
void scan_g2_serial(const TwoPhotonModel& model, std::span<const double> delays,
                    std::span<double> out);

/// Full trace with class columns. Throws DegenerateNormalization naming the
/// dark arm.
ScanTrace run_scan(const InterferometerConfig& config);
ScanTrace run_scan_serial(const InterferometerConfig& config);

} // namespace tpmi

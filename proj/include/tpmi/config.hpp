#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpmi/spectrum.hpp"

namespace tpmi {

enum class Arm : int { one = 1, two = 2 };

/// Polarizer axes in radians, physical (as mounted) convention. An empty
/// optional means the polarizer is removed from the beam.
struct Polarizers {
  std::optional<double> p0; // input, before the beam splitter
  std::optional<double> p1; // arm 1, in front of M1
  std::optional<double> p2; // arm 2, in front of M2
  std::optional<double> p3; // in front of the detector
};

/// Delay grid in seconds. τ_d = delay(arm 2) − delay(arm 1).
struct ScanGrid {
  double delay_min = -60e-15;
  double delay_max = 60e-15;
  std::size_t points = 2048;

  std::vector<double> delays() const;
  /// Same span, different number of points.
  ScanGrid resampled(std::size_t n) const;
};

struct InterferometerConfig {
  std::string name;
  SpectralModel source;
  double source_power = 1.0;
  Polarizers polarizers;
  std::optional<Arm> blocked_arm;
  ScanGrid scan;

  /// Throws ValidationError.
  void validate() const;
};

double degrees(double radians);
double radians(double degrees);

/// Arm-2 delay produced by moving M2 by `mirror_offset` meters (round trip).
double delay_from_mirror_offset(double mirror_offset);

} // namespace tpmi

#include "tpmi/config.hpp"

#include <cmath>
#include <numbers>

#include "tpmi/errors.hpp"

namespace tpmi {

std::vector<double> ScanGrid::delays() const {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = delay_min;
    return out;
  }
  const double step = (delay_max - delay_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = delay_min + step * static_cast<double>(i);
  return out;
}

ScanGrid ScanGrid::resampled(std::size_t n) const {
  ScanGrid g = *this;
  g.points = n;
  return g;
}

void InterferometerConfig::validate() const {
  source.validate();
  if (!std::isfinite(source_power) || source_power <= 0.0)
    throw ValidationError("source power must be positive");
  for (const auto& p : {polarizers.p0, polarizers.p1, polarizers.p2, polarizers.p3})
    if (p && !std::isfinite(*p))
      throw ValidationError("polarizer angles must be finite");
  if (scan.points < 2)
    throw ValidationError("scan.points must be >= 2");
  if (!std::isfinite(scan.delay_min) || !std::isfinite(scan.delay_max) ||
      !(scan.delay_min < scan.delay_max))
    throw ValidationError("scan.delay_min must be < scan.delay_max");
}

double degrees(double r) { return r * 180.0 / std::numbers::pi; }
double radians(double d) { return d * std::numbers::pi / 180.0; }

double delay_from_mirror_offset(double mirror_offset) {
  return 2.0 * mirror_offset / kSpeedOfLight;
}

} // namespace tpmi

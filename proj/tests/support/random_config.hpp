#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "tpmi/config.hpp"
#include "tpmi/engine.hpp"
#include "tpmi/errors.hpp"

namespace tpmi::testing {

/// Random interferometer: each polarizer present with probability 0.6 at a
/// uniform angle, arm blocked with probability 0.1, power in [0.1, 10],
/// bandwidth 5..60 nm around 1500..1600 nm.
inline InterferometerConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto maybe_angle = [&]() -> std::optional<double> {
    if (u(rng) < 0.6)
      return u(rng) * std::numbers::pi;
    return std::nullopt;
  };
  InterferometerConfig c;
  c.name = "random";
  c.source.center_wavelength = (1500.0 + 100.0 * u(rng)) * 1e-9;
  c.source.bandwidth_fwhm = (5.0 + 55.0 * u(rng)) * 1e-9;
  c.source_power = 0.1 * std::pow(100.0, u(rng));
  c.polarizers.p0 = maybe_angle();
  c.polarizers.p1 = maybe_angle();
  c.polarizers.p2 = maybe_angle();
  c.polarizers.p3 = maybe_angle();
  if (u(rng) < 0.1)
    c.blocked_arm = u(rng) < 0.5 ? Arm::one : Arm::two;
  return c;
}

/// A random config whose normalization is nonzero (both arms transmit).
inline InterferometerConfig random_nondegenerate_config(std::mt19937_64& rng) {
  for (;;) {
    auto c = random_config(rng);
    c.blocked_arm.reset();
    if (TwoPhotonModel(c).intensities().normalization() > 1e-6 * c.source_power * c.source_power)
      return c;
  }
}

} // namespace tpmi::testing

#pragma once

#include <random>

namespace tpmi {

template <class Rng>
double sample_frequency(const SpectralModel& model, Rng& rng) {
  std::normal_distribution<double> dist(model.center_angular_frequency(),
                                        model.angular_sigma());
  return dist(rng);
}

} // namespace tpmi

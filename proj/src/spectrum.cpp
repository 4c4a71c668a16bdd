#include "tpmi/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "tpmi/errors.hpp"

namespace tpmi {

namespace {
const double kFwhmToSigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);
}

void SpectralModel::validate() const {
  if (!std::isfinite(center_wavelength) || center_wavelength <= 0.0)
    throw ValidationError("center wavelength must be positive");
  if (!std::isfinite(bandwidth_fwhm) || bandwidth_fwhm <= 0.0)
    throw ValidationError("bandwidth must be positive");
}

bool SpectralModel::narrowband_violated() const {
  return bandwidth_fwhm > 0.1 * center_wavelength;
}

double SpectralModel::center_angular_frequency() const {
  return 2.0 * std::numbers::pi * kSpeedOfLight / center_wavelength;
}

double SpectralModel::angular_sigma() const {
  const double fwhm_omega = 2.0 * std::numbers::pi * kSpeedOfLight *
                            bandwidth_fwhm /
                            (center_wavelength * center_wavelength);
  return fwhm_omega / kFwhmToSigma;
}

std::complex<double> gamma(const SpectralModel& model, double tau) {
  const double s = model.angular_sigma() * tau;
  const double envelope = std::exp(-0.5 * s * s);
  return std::polar(envelope, -model.center_angular_frequency() * tau);
}

double coherence_time(const SpectralModel& model) {
  return 1.0 / model.angular_sigma();
}

CoherenceSample coherence_sample(const SpectralModel& model, double tau) {
  return {tau, gamma(model, tau)};
}

} // namespace tpmi

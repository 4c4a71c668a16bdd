#pragma once

#include <complex>

namespace tpmi {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

enum class SpectralShape { gaussian };

/// Chaotic source spectrum.
///
/// The bandwidth is the FWHM of the wavelength spectrum. It is converted to an
/// angular-frequency standard deviation with the narrowband Jacobian
/// dω = 2πc dλ / λ₀², then FWHM → σ by 2√(2 ln 2).
struct SpectralModel {
  double center_wavelength = 1550e-9; // m
  double bandwidth_fwhm = 30e-9;      // m
  SpectralShape shape = SpectralShape::gaussian;

  /// Throws ValidationError for non-positive or non-finite parameters.
  void validate() const;
  /// True when bandwidth ≪ center wavelength does not hold (ratio > 0.1).
  bool narrowband_violated() const;

  double center_angular_frequency() const;
  double angular_sigma() const;
};

struct CoherenceSample {
  double tau = 0.0;
  std::complex<double> gamma{1.0, 0.0};
};

/// Normalized first-order coherence γ(τ) = ⟨e^{-iωτ}⟩ over the spectrum.
std::complex<double> gamma(const SpectralModel& model, double tau);

/// τ_c with |γ(τ_c)| = e^{-1/2}.
double coherence_time(const SpectralModel& model);

CoherenceSample coherence_sample(const SpectralModel& model, double tau);

/// Draws ω from the normalized spectral density.
template <class Rng>
double sample_frequency(const SpectralModel& model, Rng& rng);

} // namespace tpmi

#include "tpmi/spectrum_impl.hpp"

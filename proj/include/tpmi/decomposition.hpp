#pragma once

#include <array>
#include <span>
#include <string>

#include "tpmi/config.hpp"
#include "tpmi/engine.hpp"

namespace tpmi {

/// Interference classes of the 16 V_TPA terms (bar colours of the term chart).
enum class ComponentClass { background, hbt, omega, two_omega };

const char* to_string(ComponentClass cls);

/// background: (I,I), (IV,IV)
/// hbt:        (II,II), (III,III), (II,III), (III,II)
/// two_omega:  (I,IV), (IV,I)
/// omega:      the remaining eight mixed terms
ComponentClass class_of(int m, int n);

struct Bar {
  int row = 0;
  int col = 0;
  std::string label; // e.g. "AII*xAIII"
  ComponentClass cls = ComponentClass::background;
  double value = 0.0; // Re V_TPA(row, col)
};

/// Class totals are in raw (unnormalized) G² units and sum to Σ Re V_TPA.
struct ComponentBreakdown {
  double tau_d = 0.0;
  double background = 0.0;
  double hbt = 0.0;
  double omega = 0.0;
  double two_omega = 0.0;
  std::array<Bar, 16> bars{};
  /// |Σ Im V_TPA| (should vanish; V_TPA is Hermitian).
  double imaginary_residual = 0.0;

  double total() const { return background + hbt + omega + two_omega; }
  /// Same breakdown with the four diagonal terms removed.
  ComponentBreakdown without_diagonal() const;
};

std::string bar_label(int m, int n);

ComponentBreakdown classify(const TwoPhotonModel& model, double tau_d);
ComponentBreakdown classify(const InterferometerConfig& config, double tau_d);

enum class Oscillation { none, omega, two_omega };

const char* to_string(Oscillation osc);

struct OscillationReport {
  Oscillation dominant = Oscillation::none;
  double omega_amplitude = 0.0;     // spectral peak near ω₀
  double two_omega_amplitude = 0.0; // spectral peak near 2ω₀
  double ratio = 0.0;               // omega / two_omega
  double peak_frequency = 0.0;      // angular frequency of the dominant peak
  double bin_width = 0.0;           // angular frequency resolution
};

/// Hann-windowed, ×4 zero-padded DFT of the mean-subtracted trace. Delays must
/// be uniformly spaced (seconds). Throws InsufficientSpan when the grid is
/// too coarse for 2ω₀ or spans fewer than four carrier periods.
OscillationReport dominant_oscillation(std::span<const double> delays,
                                       std::span<const double> values,
                                       double omega0);

/// One-sided magnitude spectrum used by dominant_oscillation; bin k is at
/// angular frequency k · bin_width. `serial` selects the reference loop.
std::vector<double> magnitude_spectrum(std::span<const double> windowed,
                                       std::size_t padded_length, bool serial = false);

enum class Extremum { maximum, minimum, neither };

const char* to_string(Extremum e);

/// Type of extremum g²(0) takes over the config's scan grid.
Extremum eraser_extremum(const InterferometerConfig& config);

} // namespace tpmi

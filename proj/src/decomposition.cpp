#include "tpmi/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "tpmi/errors.hpp"
#include "tpmi/scan.hpp"

namespace tpmi {

const char* to_string(ComponentClass cls) {
  switch (cls) {
  case ComponentClass::background: return "background";
  case ComponentClass::hbt: return "hbt";
  case ComponentClass::omega: return "omega";
  case ComponentClass::two_omega: return "two_omega";
  }
  return "?";
}

ComponentClass class_of(int m, int n) {
  if ((m == 0 && n == 0) || (m == 3 && n == 3))
    return ComponentClass::background;
  if ((m == 0 && n == 3) || (m == 3 && n == 0))
    return ComponentClass::two_omega;
  if ((m == 1 || m == 2) && (n == 1 || n == 2))
    return ComponentClass::hbt;
  return ComponentClass::omega;
}

std::string bar_label(int m, int n) {
  return amplitude_name(m) + "*x" + amplitude_name(n);
}

ComponentBreakdown ComponentBreakdown::without_diagonal() const {
  ComponentBreakdown out = *this;
  out.background = 0.0;
  for (auto& bar : out.bars) {
    if (bar.row == bar.col) {
      if (bar.cls == ComponentClass::hbt)
        out.hbt -= bar.value;
      bar.value = 0.0;
    }
  }
  return out;
}

ComponentBreakdown classify(const TwoPhotonModel& model, double tau_d) {
  const auto v = model.vtpa(tau_d).pairing_consistent;
  ComponentBreakdown out;
  out.tau_d = tau_d;
  double imag = 0.0;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      auto& bar = out.bars[4 * m + n];
      bar.row = m;
      bar.col = n;
      bar.label = bar_label(m, n);
      bar.cls = class_of(m, n);
      bar.value = v(m, n).real();
      imag += v(m, n).imag();
      switch (bar.cls) {
      case ComponentClass::background: out.background += bar.value; break;
      case ComponentClass::hbt: out.hbt += bar.value; break;
      case ComponentClass::omega: out.omega += bar.value; break;
      case ComponentClass::two_omega: out.two_omega += bar.value; break;
      }
    }
  }
  out.imaginary_residual = std::abs(imag);
  return out;
}

ComponentBreakdown classify(const InterferometerConfig& config, double tau_d) {
  return classify(TwoPhotonModel(config), tau_d);
}

const char* to_string(Oscillation osc) {
  switch (osc) {
  case Oscillation::none: return "none";
  case Oscillation::omega: return "omega";
  case Oscillation::two_omega: return "two_omega";
  }
  return "?";
}

std::vector<double> magnitude_spectrum(std::span<const double> windowed,
                                       std::size_t padded_length, bool serial) {
  const std::size_t bins = padded_length / 2 + 1;
  const std::size_t n = windowed.size();
  std::vector<double> mag(bins);
  const double base = -2.0 * std::numbers::pi / static_cast<double>(padded_length);
  auto bin = [&](std::size_t k) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      // k·t mod L keeps the phase argument small and exact.
      const std::size_t kt = (k * t) % padded_length;
      acc += windowed[t] * std::polar(1.0, base * static_cast<double>(kt));
    }
    mag[k] = std::abs(acc);
  };
  if (serial) {
    for (std::size_t k = 0; k < bins; ++k)
      bin(k);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(bins); ++k)
      bin(static_cast<std::size_t>(k));
  }
  return mag;
}

OscillationReport dominant_oscillation(std::span<const double> delays,
                                       std::span<const double> values,
                                       double omega0) {
  if (delays.size() != values.size() || delays.size() < 8)
    throw InsufficientSpan("trace too short for spectral analysis");
  const std::size_t n = delays.size();
  const double dt = (delays.back() - delays.front()) / static_cast<double>(n - 1);
  const double span = delays.back() - delays.front();
  const double period = 2.0 * std::numbers::pi / omega0;
  if (!(dt > 0.0) || span < 4.0 * period)
    throw InsufficientSpan("trace covers fewer than four carrier periods");
  if (std::numbers::pi / dt < 2.25 * omega0)
    throw InsufficientSpan("sampling too coarse to resolve 2 omega_0");

  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
  std::vector<double> windowed(n);
  double scale = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                                          static_cast<double>(n - 1));
    windowed[t] = w * (values[t] - mean);
    scale += w * std::abs(values[t]);
  }

  const std::size_t padded = 4 * n;
  const auto mag = magnitude_spectrum(windowed, padded);
  const double bin_width = 2.0 * std::numbers::pi / (static_cast<double>(padded) * dt);

  auto band_peak = [&](double lo, double hi) {
    std::pair<double, std::size_t> best{0.0, 0};
    for (std::size_t k = 0; k < mag.size(); ++k) {
      const double w = static_cast<double>(k) * bin_width;
      if (w >= lo && w <= hi && mag[k] > best.first)
        best = {mag[k], k};
    }
    return best;
  };
  const auto [a1, k1] = band_peak(0.75 * omega0, 1.25 * omega0);
  const auto [a2, k2] = band_peak(1.75 * omega0, 2.25 * omega0);

  OscillationReport rep;
  rep.omega_amplitude = a1;
  rep.two_omega_amplitude = a2;
  rep.bin_width = bin_width;
  rep.ratio = a2 > 0.0 ? a1 / a2 : (a1 > 0.0 ? INFINITY : 0.0);
  const double floor = 1e-9 * std::max(scale, 1e-300);
  if (std::max(a1, a2) <= floor) {
    rep.dominant = Oscillation::none;
  } else if (a1 >= a2) {
    rep.dominant = Oscillation::omega;
    rep.peak_frequency = static_cast<double>(k1) * bin_width;
  } else {
    rep.dominant = Oscillation::two_omega;
    rep.peak_frequency = static_cast<double>(k2) * bin_width;
  }
  return rep;
}

const char* to_string(Extremum e) {
  switch (e) {
  case Extremum::maximum: return "maximum";
  case Extremum::minimum: return "minimum";
  case Extremum::neither: return "neither";
  }
  return "?";
}

Extremum eraser_extremum(const InterferometerConfig& config) {
  const TwoPhotonModel model(config);
  const auto delays = config.scan.delays();
  std::vector<double> trace(delays.size());
  scan_g2(model, delays, trace);
  const auto [lo, hi] = std::minmax_element(trace.begin(), trace.end());
  const double at_zero = model.g2(0.0);
  const double tol = 1e-9 * std::max(std::abs(*hi), 1.0);
  if (at_zero >= *hi - tol)
    return Extremum::maximum;
  if (at_zero <= *lo + tol)
    return Extremum::minimum;
  return Extremum::neither;
}

} // namespace tpmi

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tpmi/errors.hpp"
#include "tpmi/rng.hpp"
#include "tpmi/spectrum.hpp"

using namespace tpmi;

namespace {

// Composite Simpson integration of the normalized Gaussian spectral density
// times exp(-i omega tau), over omega0 +- 14 sigma.
std::complex<double> gamma_quadrature(const SpectralModel& m, double tau) {
  const double w0 = m.center_angular_frequency();
  const double s = m.angular_sigma();
  const int n = 40000;
  const double lo = w0 - 14.0 * s, hi = w0 + 14.0 * s;
  const double h = (hi - lo) / n;
  std::complex<double> acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double w = lo + h * k;
    const double z = (w - w0) / s;
    const double density = std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi));
    const double weight = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += weight * density * std::polar(1.0, -w * tau);
  }
  return acc * h / 3.0;
}

} // namespace

TEST_SUITE("spectrum") {

TEST_CASE("default source") {
  const SpectralModel m;
  CHECK(m.center_wavelength == 1550e-9);
  CHECK(m.bandwidth_fwhm == 30e-9);
  CHECK(m.shape == SpectralShape::gaussian);
  CHECK_FALSE(m.narrowband_violated());
}

TEST_CASE("coherence time is femtoseconds and scales inversely with bandwidth") {
  SpectralModel m;
  const double tc = coherence_time(m);
  CHECK(tc >= 1e-15);
  CHECK(tc < 1e-12);
  // sigma_omega = 2 pi c dlambda / lambda^2 / (2 sqrt(2 ln 2))
  const double expected = 1.0 / (2 * std::numbers::pi * kSpeedOfLight * 30e-9 / (1550e-9 * 1550e-9) /
                                 (2 * std::sqrt(2 * std::log(2.0))));
  CHECK(tc == doctest::Approx(expected).epsilon(1e-14));
  m.bandwidth_fwhm *= 2;
  CHECK(coherence_time(m) == doctest::Approx(tc / 2).epsilon(1e-14));
}

TEST_CASE("gamma at the coherence time") {
  const SpectralModel m;
  const double tc = coherence_time(m);
  CHECK(std::abs(gamma(m, tc)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(std::abs(gamma(m, tc) - gamma_quadrature(m, tc)) < 1e-10);
  CHECK(gamma(m, 0.0) == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(gamma(m, 10 * tc)) < 1e-20);
  CHECK(std::abs(gamma(m, -10 * tc)) < 1e-20);
}

TEST_CASE("closed form matches quadrature at random delays") {
  std::mt19937_64 rng(2024);
  const SpectralModel m;
  const double tc = coherence_time(m);
  std::uniform_real_distribution<double> u(-6 * tc, 6 * tc);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = u(rng);
    worst = std::max(worst, std::abs(gamma(m, tau) - gamma_quadrature(m, tau)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("hermitian symmetry and monotone envelope") {
  const SpectralModel m;
  const double tc = coherence_time(m);
  double prev = 1.0;
  for (int i = 0; i <= 400; ++i) {
    const double tau = i * tc / 40.0;
    CHECK(gamma(m, -tau) == std::conj(gamma(m, tau)));
    const double env = std::abs(gamma(m, tau));
    CHECK(env <= prev + 1e-15);
    CHECK(std::abs(std::abs(gamma(m, -tau)) - env) < 1e-15);
    prev = env;
  }
}

TEST_CASE("coherence samples") {
  const SpectralModel m;
  const auto s = coherence_sample(m, 7e-15);
  CHECK(s.tau == 7e-15);
  CHECK(s.gamma == gamma(m, 7e-15));
}

TEST_CASE("frequency sampling statistics") {
  const SpectralModel m;
  CounterStream rng(42, 0, 0);
  const int n = 1000000;
  double mean = 0.0, m2 = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double w = sample_frequency(m, rng);
    const double d = w - mean;
    mean += d / i;
    m2 += d * (w - mean);
  }
  const double sd = std::sqrt(m2 / (n - 1));
  CHECK(std::abs(mean - m.center_angular_frequency()) < 4 * m.angular_sigma() / std::sqrt(n));
  CHECK(std::abs(sd / m.angular_sigma() - 1.0) < 0.01);
}

TEST_CASE("fixed stream gives a bit-identical sequence") {
  const SpectralModel m;
  CounterStream a(9, 3, 5), b(9, 3, 5), c(9, 3, 6);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = sample_frequency(m, a);
    CHECK(x == sample_frequency(m, b));
    differs = differs || x != sample_frequency(m, c);
  }
  CHECK(differs);
}

TEST_CASE("uniform draws stay in [0, 1)") {
  CounterStream s(1, 2, 3);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("validation") {
  SpectralModel m;
  m.bandwidth_fwhm = 0.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.bandwidth_fwhm = 30e-9;
  m.center_wavelength = -1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.center_wavelength = 1550e-9;
  m.bandwidth_fwhm = 200e-9;
  CHECK(m.narrowband_violated());
}

}

#include "tpmi/engine.hpp"

#include <cmath>
#include <numbers>

#include "tpmi/errors.hpp"

namespace tpmi {

namespace {

using cd = std::complex<double>;

// Path index (0 or 1) of photon a / b for amplitude m.
int path_a(int m) { return kAmplitudes[m].path_a - 1; }
int path_b(int m) { return kAmplitudes[m].path_b - 1; }

Eigen::Matrix4cd kron(const PolarizationTransform& x, const PolarizationTransform& y) {
  Eigen::Matrix4cd k;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          k(2 * p + q, 2 * a + b) = x(p, a) * y(q, b);
  return k;
}

// Pairings below this fraction of power² are treated as cancelled.
constexpr double kSurvivalThreshold = 1e-15;

} // namespace

std::string amplitude_name(int index) {
  static const char* names[] = {"AI", "AII", "AIII", "AIV"};
  return names[index];
}

TemporalKind temporal_kind(int m, int n) {
  const int da = path_a(n) - path_a(m);
  const int db = path_b(n) - path_b(m);
  const int moving = (da != 0) + (db != 0);
  if (moving == 0)
    return TemporalKind::constant;
  if (moving == 1)
    return TemporalKind::linear;
  return da == db ? TemporalKind::quadratic : TemporalKind::hbt;
}

const char* to_string(TemporalKind kind) {
  switch (kind) {
  case TemporalKind::constant: return "constant";
  case TemporalKind::hbt: return "hbt";
  case TemporalKind::linear: return "linear";
  case TemporalKind::quadratic: return "quadratic";
  }
  return "?";
}

std::complex<double> PairingLedger::total_weight() const {
  cd sum = 0.0;
  for (const auto& p : pairings)
    sum += p.weight;
  return sum;
}

std::complex<double> TwoPhotonCovariance::balanced_sum() const {
  cd sum = 0.0;
  for (const auto& pos : kBalancedPositions)
    sum += entries(pos.row(), pos.col());
  return sum;
}

std::array<PolarizationTransform, 2> arm_transforms(const InterferometerConfig& config) {
  std::array<PolarizationTransform, 2> out;
  for (Arm arm : {Arm::one, Arm::two}) {
    const int i = static_cast<int>(arm) - 1;
    try {
      out[i] = build_arm_chain(config, arm).transform;
    } catch (const DegenerateChain&) {
      out[i] = PolarizationTransform::Zero();
    }
  }
  return out;
}

Eigen::Matrix2cd pair_amplitude(const std::array<PolarizationTransform, 2>& arms,
                                const JonesVector& mode_a, double omega_a,
                                const JonesVector& mode_b, double omega_b,
                                double tau_d) {
  // τ_1 = 0, so arm 1 carries no phase.
  const JonesVector va = arms[0] * mode_a + arms[1] * mode_a * std::polar(1.0, -omega_a * tau_d);
  const JonesVector vb = arms[0] * mode_b + arms[1] * mode_b * std::polar(1.0, -omega_b * tau_d);
  Eigen::Matrix2cd m;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      m(p, q) = va(p) * vb(q) + va(q) * vb(p);
  m(0, 0) /= std::numbers::sqrt2;
  m(1, 1) /= std::numbers::sqrt2;
  return m;
}

Eigen::Matrix2cd pair_amplitude(const InterferometerConfig& config, double omega_a,
                                std::size_t mode_a, double omega_b,
                                std::size_t mode_b, double tau_d) {
  const auto arms = arm_transforms(config);
  const auto input = input_polarization(config);
  const double amp = std::sqrt(config.source_power);
  return pair_amplitude(arms, amp * input.modes.at(mode_a).vector, omega_a,
                        amp * input.modes.at(mode_b).vector, omega_b, tau_d);
}

double detection_sum(const Eigen::Matrix2cd& amplitude) {
  return 0.5 * amplitude.squaredNorm();
}

ArmIntensities mean_arm_intensities(const InterferometerConfig& config) {
  const auto arms = arm_transforms(config);
  const auto input = input_polarization(config);
  ArmIntensities out;
  for (const auto& mode : input.modes) {
    out.arm1 += mode.weight * (arms[0] * mode.vector).squaredNorm();
    out.arm2 += mode.weight * (arms[1] * mode.vector).squaredNorm();
  }
  out.arm1 *= config.source_power;
  out.arm2 *= config.source_power;
  return out;
}

std::complex<double> temporal_factor(int m, int n, std::complex<double> gamma_td) {
  auto factor = [&](int d) -> cd {
    if (d == 0)
      return 1.0;
    return d > 0 ? gamma_td : std::conj(gamma_td);
  };
  return factor(path_a(n) - path_a(m)) * factor(path_b(n) - path_b(m));
}

TermMatrix scalar_matrix(std::complex<double> gamma_td) {
  TermMatrix s;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      s(m, n) = temporal_factor(m, n, gamma_td);
  return s;
}

TermMatrix scalar_matrix(const SpectralModel& model, double tau_d) {
  return scalar_matrix(gamma(model, tau_d));
}

LedgerMatrix pairing_ledger(const InterferometerConfig& config) {
  const auto arms = arm_transforms(config);
  const auto input = input_polarization(config);
  const double power = config.source_power;

  LedgerMatrix ledger;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const int i = path_a(m), j = path_b(m), k = path_a(n), l = path_b(n);
      std::array<cd, 6> weights{};
      for (const auto& a : input.modes) {
        for (const auto& b : input.modes) {
          const JonesVector via = arms[i] * a.vector;
          const JonesVector vjb = arms[j] * b.vector;
          const JonesVector vka = arms[k] * a.vector;
          const JonesVector vlb = arms[l] * b.vector;
          const double w = a.weight * b.weight * power * power;
          for (std::size_t t = 0; t < kBalancedPositions.size(); ++t) {
            const auto& pos = kBalancedPositions[t];
            weights[t] += w * std::conj(via(pos.p) * vjb(pos.q)) * vlb(pos.r) * vka(pos.s);
          }
        }
      }
      auto& cell = ledger[m][n];
      cell.m = m;
      cell.n = n;
      const TemporalKind kind = temporal_kind(m, n);
      for (std::size_t t = 0; t < kBalancedPositions.size(); ++t)
        if (std::abs(weights[t]) > kSurvivalThreshold * power * power)
          cell.pairings.push_back({kBalancedPositions[t], weights[t], kind});
    }
  }
  return ledger;
}

TermMatrix coefficient_matrix(const InterferometerConfig& config) {
  const auto ledger = pairing_ledger(config);
  TermMatrix c;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      c(m, n) = ledger[m][n].total_weight();
  return c;
}

TwoPhotonCovariance input_covariance(const InterferometerConfig& config) {
  const auto input = input_polarization(config);
  const double power = config.source_power;
  TwoPhotonCovariance j0;
  for (const auto& a : input.modes) {
    for (const auto& b : input.modes) {
      Eigen::Vector4cd bra, ket;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          bra(2 * x + y) = a.vector(x) * b.vector(y); // photon a, photon b
          ket(2 * x + y) = b.vector(x) * a.vector(y); // photon b, photon a
        }
      j0.entries += a.weight * b.weight * power * power * bra.conjugate() * ket.transpose();
    }
  }
  return j0;
}

TwoPhotonCovariance transform_covariance(const TwoPhotonCovariance& input,
                                         const PolarizationTransform& ti,
                                         const PolarizationTransform& tj,
                                         const PolarizationTransform& tk,
                                         const PolarizationTransform& tl,
                                         std::array<int, 4> paths) {
  TwoPhotonCovariance out;
  out.paths = paths;
  const Eigen::Matrix4cd bra = kron(ti, tj).conjugate();
  const Eigen::Matrix4cd ket = kron(tl, tk);
  out.entries = bra * input.entries * ket.transpose();
  return out;
}

TermMatrix coefficient_matrix_via_covariance(const InterferometerConfig& config) {
  const auto arms = arm_transforms(config);
  const auto j0 = input_covariance(config);
  TermMatrix c;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const int i = path_a(m), j = path_b(m), k = path_a(n), l = path_b(n);
      const auto jd = transform_covariance(j0, arms[i], arms[j], arms[k], arms[l],
                                           {i + 1, j + 1, k + 1, l + 1});
      c(m, n) = jd.balanced_sum();
    }
  }
  return c;
}

VtpaResult assemble_vtpa(const LedgerMatrix& ledger, const TermMatrix& c,
                         std::complex<double> gamma_td) {
  VtpaResult out;
  out.hadamard = c.cwiseProduct(scalar_matrix(gamma_td));
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      cd sum = 0.0;
      for (const auto& pairing : ledger[m][n].pairings)
        sum += pairing.weight * temporal_factor(m, n, gamma_td);
      out.pairing_consistent(m, n) = sum;
    }
  }
  return out;
}

TwoPhotonModel::TwoPhotonModel(const InterferometerConfig& config)
    : config_(config),
      ledger_(pairing_ledger(config)),
      intensities_(mean_arm_intensities(config)) {
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      coefficients_(m, n) = ledger_[m][n].total_weight();
}

double TwoPhotonModel::raw_signal_from_gamma(std::complex<double> gamma_td) const {
  double sum = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      sum += (coefficients_(m, n) * temporal_factor(m, n, gamma_td)).real();
  return sum;
}

double TwoPhotonModel::raw_signal(double tau_d) const {
  return raw_signal_from_gamma(gamma(config_.source, tau_d));
}

double TwoPhotonModel::baseline_raw() const {
  return raw_signal_from_gamma(0.0);
}

double TwoPhotonModel::normalization() const {
  const double norm = intensities_.normalization();
  if (!(norm > 0.0)) {
    const char* which = intensities_.arm1 > 0.0 ? "arm 2 (p2/p3)" : "arm 1 (p1/p3)";
    throw DegenerateNormalization(std::string("zero mean intensity in ") + which);
  }
  return norm;
}

double TwoPhotonModel::g2_from_gamma(std::complex<double> gamma_td) const {
  return raw_signal_from_gamma(gamma_td) / normalization();
}

double TwoPhotonModel::g2(double tau_d) const {
  return g2_from_gamma(gamma(config_.source, tau_d));
}

VtpaResult TwoPhotonModel::vtpa(double tau_d) const {
  return assemble_vtpa(ledger_, coefficients_, gamma(config_.source, tau_d));
}

double g2_direct(const InterferometerConfig& config, double tau_d) {
  return TwoPhotonModel(config).g2(tau_d);
}

std::array<double, 4> path_probabilities(const InterferometerConfig& config) {
  const auto c = coefficient_matrix(config);
  std::array<double, 4> out{};
  double total = 0.0;
  for (int m = 0; m < 4; ++m) {
    out[m] = c(m, m).real();
    total += out[m];
  }
  if (!(total > 0.0))
    throw DegenerateNormalization("no two-photon rate through either arm");
  for (double& v : out)
    v /= total;
  return out;
}

double blocked_arm_rate(const InterferometerConfig& config, Arm blocked) {
  InterferometerConfig open = config;
  open.blocked_arm.reset();
  InterferometerConfig closed = open;
  closed.blocked_arm = blocked;
  const double open_rate = TwoPhotonModel(open).baseline_raw();
  if (!(open_rate > 0.0))
    throw DegenerateNormalization("no two-photon rate with both arms open");
  return TwoPhotonModel(closed).baseline_raw() / open_rate;
}

} // namespace tpmi

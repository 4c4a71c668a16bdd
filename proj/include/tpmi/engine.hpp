#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tpmi/config.hpp"
#include "tpmi/jones.hpp"
#include "tpmi/spectrum.hpp"

namespace tpmi {

// Two-photon amplitudes. Photon a is the first detection slot, photon b the
// second; path 1/2 is the arm taken.
//
//   A_I  : a→1, b→1      A_II : a→1, b→2
//   A_III: a→2, b→1      A_IV : a→2, b→2
//
// Every 4×4 TermMatrix uses this order for both rows (conjugated amplitude m)
// and columns (amplitude n).

enum class AmplitudeLabel { I, II, III, IV };

struct AmplitudeIndex {
  AmplitudeLabel label;
  int path_a;
  int path_b;
};

inline constexpr std::array<AmplitudeIndex, 4> kAmplitudes{{
    {AmplitudeLabel::I, 1, 1},
    {AmplitudeLabel::II, 1, 2},
    {AmplitudeLabel::III, 2, 1},
    {AmplitudeLabel::IV, 2, 2},
}};

/// "AI", "AII", "AIII", "AIV".
std::string amplitude_name(int index);

using TermMatrix = Eigen::Matrix4cd;

/// Temporal factor attached to the (m, n) term after the spectral average.
enum class TemporalKind {
  constant,    // 1
  hbt,         // |γ(τ_d)|²
  linear,      // γ(±τ_d)
  quadratic,   // γ(±τ_d)²
};

TemporalKind temporal_kind(int m, int n);
const char* to_string(TemporalKind kind);

/// Polarization indices of one fourth-order moment
/// ⟨E_{a,p}^- E_{b,q}^- E_{b,r}^+ E_{a,s}^+⟩, 0 = x, 1 = y.
struct PolarizationPosition {
  int p, q, r, s;
  int row() const { return 2 * p + q; }
  int col() const { return 2 * r + s; }
};

/// The six phase-balanced positions whose sum forms a coefficient:
/// xxxx, xyxy, xyyx, yxxy, yxyx, yyyy.
inline constexpr std::array<PolarizationPosition, 6> kBalancedPositions{{
    {0, 0, 0, 0},
    {0, 1, 0, 1},
    {0, 1, 1, 0},
    {1, 0, 0, 1},
    {1, 0, 1, 0},
    {1, 1, 1, 1},
}};

struct Pairing {
  PolarizationPosition position;
  std::complex<double> weight;
  TemporalKind kind;
};

/// Surviving polarization pairings of one (m, n) term.
struct PairingLedger {
  int m = 0;
  int n = 0;
  std::vector<Pairing> pairings;

  std::complex<double> total_weight() const;
};

using LedgerMatrix = std::array<std::array<PairingLedger, 4>, 4>;

/// Two-photon covariance over polarization 4-tuples for one path 4-tuple.
/// Row index (p, q) = 2p + q (bra: photon a, photon b); column index
/// (r, s) = 2r + s (ket: photon b, photon a).
struct TwoPhotonCovariance {
  Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();
  std::array<int, 4> paths{0, 0, 0, 0}; // (i, j, k, l); 0 at the input plane

  std::complex<double> at(int p, int q, int r, int s) const {
    return entries(2 * p + q, 2 * r + s);
  }
  /// Sum over the six balanced positions.
  std::complex<double> balanced_sum() const;
};

/// Per-arm Jones matrices. Blocked or fully crossed arms are zero.
std::array<PolarizationTransform, 2> arm_transforms(const InterferometerConfig& config);

/// Detection amplitude for one photon pair:
///   M[p,q] = (V_a,p V_b,q + V_a,q V_b,p) / √(1 + δ_pq),
///   V = Σ_i T_i u e^{-iω τ_i},  τ_1 = 0, τ_2 = τ_d.
/// The √2 on the diagonal makes detection_sum count each unordered detector
/// pair {p, q} exactly once.
Eigen::Matrix2cd pair_amplitude(const std::array<PolarizationTransform, 2>& arms,
                                const JonesVector& mode_a, double omega_a,
                                const JonesVector& mode_b, double omega_b,
                                double tau_d);

/// Convenience overload: modes are indices into input_polarization(config)
/// and the source power scales both fields.
Eigen::Matrix2cd pair_amplitude(const InterferometerConfig& config, double omega_a,
                                std::size_t mode_a, double omega_b,
                                std::size_t mode_b, double tau_d);

/// ½ Σ_{p,q} |M[p,q]|².
double detection_sum(const Eigen::Matrix2cd& amplitude);

struct ArmIntensities {
  double arm1 = 0.0;
  double arm2 = 0.0;
  /// 4⟨I₁⟩⟨I₂⟩; equals the off-balance G² of any orthogonal-arm scheme.
  double normalization() const { return 4.0 * arm1 * arm2; }
};

ArmIntensities mean_arm_intensities(const InterferometerConfig& config);

/// S_TPA from the value γ(τ_d). Entry (m, n) = γ(τ_k − τ_i) γ(τ_l − τ_j).
TermMatrix scalar_matrix(std::complex<double> gamma_td);
TermMatrix scalar_matrix(const SpectralModel& model, double tau_d);

/// Temporal factor of one kind given γ(τ_d); `m, n` fix the carrier sign.
std::complex<double> temporal_factor(int m, int n, std::complex<double> gamma_td);

/// Pairing ledger by expanding every detector field through the arm chains
/// and averaging over the input mixture.
LedgerMatrix pairing_ledger(const InterferometerConfig& config);

/// C by direct expansion (sum of the ledger weights).
TermMatrix coefficient_matrix(const InterferometerConfig& config);

/// Input-plane covariance J₀.
TwoPhotonCovariance input_covariance(const InterferometerConfig& config);

/// Propagates J₀ to the detector: bra by conj(T_i ⊗ T_j), ket by the
/// photon-b/photon-a ordered lift of (T_k, T_l).
TwoPhotonCovariance transform_covariance(const TwoPhotonCovariance& input,
                                         const PolarizationTransform& ti,
                                         const PolarizationTransform& tj,
                                         const PolarizationTransform& tk,
                                         const PolarizationTransform& tl,
                                         std::array<int, 4> paths = {0, 0, 0, 0});

/// C through J₀ → transform → balanced sum, one path 4-tuple per entry.
TermMatrix coefficient_matrix_via_covariance(const InterferometerConfig& config);

struct VtpaResult {
  TermMatrix pairing_consistent; // per-pairing temporal factors
  TermMatrix hadamard;           // literal C ∘ S
};

VtpaResult assemble_vtpa(const LedgerMatrix& ledger, const TermMatrix& c,
                         std::complex<double> gamma_td);

/// Precomputed coefficient data for one configuration. Evaluating a delay is
/// then a handful of complex multiplies.
class TwoPhotonModel {
public:
  explicit TwoPhotonModel(const InterferometerConfig& config);

  const InterferometerConfig& config() const { return config_; }
  const TermMatrix& coefficients() const { return coefficients_; }
  const LedgerMatrix& ledger() const { return ledger_; }
  const ArmIntensities& intensities() const { return intensities_; }

  /// Σ Re V_TPA at τ_d (unnormalized G²).
  double raw_signal(double tau_d) const;
  double raw_signal_from_gamma(std::complex<double> gamma_td) const;
  /// Off-balance (|τ_d| → ∞) G².
  double baseline_raw() const;

  /// Normalized g². Throws DegenerateNormalization if an arm is dark.
  double g2(double tau_d) const;
  double g2_from_gamma(std::complex<double> gamma_td) const;
  double normalization() const;

  VtpaResult vtpa(double tau_d) const;

private:
  InterferometerConfig config_;
  TermMatrix coefficients_;
  LedgerMatrix ledger_;
  ArmIntensities intensities_;
};

double g2_direct(const InterferometerConfig& config, double tau_d);

/// Off-balance shares (|A_I|², |A_II|², |A_III|², |A_IV|²), summing to 1.
std::array<double, 4> path_probabilities(const InterferometerConfig& config);

/// Off-balance TPA rate with `blocked` arm obstructed, relative to the open rate.
double blocked_arm_rate(const InterferometerConfig& config, Arm blocked);

} // namespace tpmi

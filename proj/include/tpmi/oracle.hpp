#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tpmi/config.hpp"

namespace tpmi {

// Monte-Carlo estimate of g² that samples photon pairs directly: per
// realization it draws the two photon frequencies from the spectrum and the
// two polarization modes from the input mixture, then evaluates the
// detection sum of pair_amplitude. No closed-form coherence function is
// used. It samples the same statistical model the closed form integrates,
// so it checks the algebra (coefficient assembly, pairings, beam-splitter
// conventions, temporal factors), not the choice of model.

struct OracleEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

struct OracleRun {
  std::uint64_t realizations = 0;
  std::uint64_t master_seed = 0;
  std::string config_hash;
  std::vector<double> delays;
  std::vector<OracleEstimate> estimates;
};

/// Realizations are accumulated in fixed blocks of this size and blocks are
/// merged in index order, so results do not depend on the thread count.
inline constexpr std::uint64_t kOracleBlock = 1024;

/// Throws ValidationError if realizations < 100, DegenerateNormalization as
/// g2_direct does.
OracleEstimate mc_g2(const InterferometerConfig& config, double tau_d,
                     std::uint64_t realizations, std::uint64_t master_seed);

/// Delay i uses RNG stream i; realization r uses substream r.
OracleRun run_oracle(const InterferometerConfig& config, std::span<const double> delays,
                     std::uint64_t realizations, std::uint64_t master_seed);
OracleRun run_oracle_serial(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed);

struct CompareRow {
  double delay = 0.0;
  double mc_mean = 0.0;
  double mc_standard_error = 0.0;
  double closed_form = 0.0;
  double z = 0.0;
  bool flagged = false;
};

struct CompareReport {
  std::string config_hash;
  std::uint64_t realizations = 0;
  std::uint64_t master_seed = 0;
  double z_threshold = 4.0;
  std::vector<CompareRow> rows;
  double max_abs_z = 0.0;
  std::size_t flags = 0;

  bool passed() const { return flags == 0; }
};

/// z-scores of the oracle against g2_direct on `delays`.
CompareReport compare_trace(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed,
                            double z_threshold = 4.0);

/// Same, against an arbitrary reference g²(τ_d) (used to check that a wrong
/// closed form is caught).
CompareReport compare_trace(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed,
                            const std::function<double(double)>& reference,
                            double z_threshold = 4.0);

/// 64-bit FNV-1a of the canonical config JSON, as 16 hex digits.
std::string config_hash(const InterferometerConfig& config);

} // namespace tpmi

#include "tpmi/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "tpmi/engine.hpp"
#include "tpmi/errors.hpp"
#include "tpmi/io.hpp"
#include "tpmi/jones.hpp"
#include "tpmi/rng.hpp"
#include "tpmi/spectrum.hpp"

namespace tpmi {

namespace {

struct BlockStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const BlockStats& o) {
    if (o.count == 0)
      return;
    const auto n = count + o.count;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(n);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) /
                     static_cast<double>(n);
    count = n;
  }
};

struct Sampler {
  std::array<PolarizationTransform, 2> arms;
  std::vector<JonesVector> modes;
  std::vector<double> cumulative;
  SpectralModel spectrum;

  explicit Sampler(const InterferometerConfig& config)
      : arms(arm_transforms(config)), spectrum(config.source) {
    const auto input = input_polarization(config);
    const double amp = std::sqrt(config.source_power);
    double acc = 0.0;
    for (const auto& m : input.modes) {
      modes.push_back(amp * m.vector);
      acc += m.weight;
      cumulative.push_back(acc);
    }
  }

  std::size_t pick(double u) const {
    for (std::size_t k = 0; k + 1 < cumulative.size(); ++k)
      if (u < cumulative[k])
        return k;
    return cumulative.size() - 1;
  }

  double realization(std::uint64_t seed, std::uint64_t stream, std::uint64_t r,
                     double tau_d) const {
    CounterStream rng(seed, stream, r);
    const std::size_t ma = pick(rng.uniform());
    const std::size_t mb = pick(rng.uniform());
    const double wa = sample_frequency(spectrum, rng);
    const double wb = sample_frequency(spectrum, rng);
    return detection_sum(pair_amplitude(arms, modes[ma], wa, modes[mb], wb, tau_d));
  }

  BlockStats block(std::uint64_t seed, std::uint64_t stream, std::uint64_t begin,
                   std::uint64_t end, double tau_d) const {
    BlockStats s;
    for (std::uint64_t r = begin; r < end; ++r)
      s.push(realization(seed, stream, r, tau_d));
    return s;
  }
};

OracleRun oracle_impl(const InterferometerConfig& config, std::span<const double> delays,
                      std::uint64_t realizations, std::uint64_t seed, bool serial) {
  if (realizations < 100)
    throw ValidationError("oracle needs at least 100 realizations");
  const double norm = TwoPhotonModel(config).normalization();
  const Sampler sampler(config);

  const std::uint64_t blocks = (realizations + kOracleBlock - 1) / kOracleBlock;
  const std::uint64_t tasks = blocks * delays.size();
  std::vector<BlockStats> partial(tasks);

  auto run_task = [&](std::uint64_t t) {
    const std::uint64_t d = t / blocks;
    const std::uint64_t b = t % blocks;
    const std::uint64_t begin = b * kOracleBlock;
    const std::uint64_t end = std::min(realizations, begin + kOracleBlock);
    partial[t] = sampler.block(seed, d, begin, end, delays[d]);
  };
  if (serial) {
    for (std::uint64_t t = 0; t < tasks; ++t)
      run_task(t);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t)
      run_task(static_cast<std::uint64_t>(t));
  }

  OracleRun run;
  run.realizations = realizations;
  run.master_seed = seed;
  run.config_hash = config_hash(config);
  run.delays.assign(delays.begin(), delays.end());
  run.estimates.resize(delays.size());
  for (std::size_t d = 0; d < delays.size(); ++d) {
    BlockStats total;
    for (std::uint64_t b = 0; b < blocks; ++b)
      total.merge(partial[d * blocks + b]);
    const double n = static_cast<double>(total.count);
    const double var = total.count > 1 ? total.m2 / (n - 1.0) : 0.0;
    run.estimates[d].mean = total.mean / norm;
    run.estimates[d].standard_error = std::sqrt(var / n) / norm;
  }
  return run;
}

} // namespace

OracleEstimate mc_g2(const InterferometerConfig& config, double tau_d,
                     std::uint64_t realizations, std::uint64_t master_seed) {
  const double d[1] = {tau_d};
  return run_oracle(config, d, realizations, master_seed).estimates.front();
}

OracleRun run_oracle(const InterferometerConfig& config, std::span<const double> delays,
                     std::uint64_t realizations, std::uint64_t master_seed) {
  return oracle_impl(config, delays, realizations, master_seed, false);
}

OracleRun run_oracle_serial(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed) {
  return oracle_impl(config, delays, realizations, master_seed, true);
}

CompareReport compare_trace(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed,
                            const std::function<double(double)>& reference,
                            double z_threshold) {
  if (delays.empty())
    throw ValidationError("comparison grid is empty");
  const auto run = run_oracle(config, delays, realizations, master_seed);
  CompareReport rep;
  rep.config_hash = run.config_hash;
  rep.realizations = realizations;
  rep.master_seed = master_seed;
  rep.z_threshold = z_threshold;
  for (std::size_t i = 0; i < delays.size(); ++i) {
    CompareRow row;
    row.delay = delays[i];
    row.mc_mean = run.estimates[i].mean;
    row.mc_standard_error = run.estimates[i].standard_error;
    row.closed_form = reference(delays[i]);
    const double diff = row.mc_mean - row.closed_form;
    if (row.mc_standard_error > 0.0) {
      row.z = diff / row.mc_standard_error;
    } else {
      // Deterministic per-realization signal: compare to rounding.
      const double tol = 1e-9 * std::max(1.0, std::abs(row.closed_form));
      row.z = std::abs(diff) <= tol ? 0.0 : std::copysign(INFINITY, diff);
    }
    row.flagged = std::abs(row.z) > z_threshold;
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(row.z));
    rep.flags += row.flagged;
    rep.rows.push_back(row);
  }
  return rep;
}

CompareReport compare_trace(const InterferometerConfig& config,
                            std::span<const double> delays,
                            std::uint64_t realizations, std::uint64_t master_seed,
                            double z_threshold) {
  const TwoPhotonModel model(config);
  return compare_trace(
      config, delays, realizations, master_seed,
      [&](double tau) { return model.g2(tau); }, z_threshold);
}

std::string config_hash(const InterferometerConfig& config) {
  const std::string text = config_to_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace tpmi

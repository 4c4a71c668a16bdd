#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tpmi/decomposition.hpp"
#include "tpmi/errors.hpp"
#include "tpmi/io.hpp"
#include "tpmi/oracle.hpp"
#include "tpmi/presets.hpp"
#include "tpmi/scan.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kCompareFail = 2,
  kParse = 3,
  kValidation = 4,
  kDegenerate = 5,
};

struct Source {
  std::string config;
  std::string preset;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--config", config, "JSON config file");
    auto* p = cmd->add_option("--preset", preset, "built-in scenario name");
    c->excludes(p);
    p->excludes(c);
  }

  tpmi::InterferometerConfig load() const {
    if (!preset.empty())
      return tpmi::preset(preset);
    if (config.empty())
      throw CLI::RequiredError("--config or --preset");
    return tpmi::load_config(config);
  }
};

std::vector<double> compare_grid(const tpmi::InterferometerConfig& config, std::size_t n) {
  return config.scan.resampled(n).delays();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon Michelson interferometer simulator"};
  app.require_subcommand(1);

  Source src;
  std::string out;
  std::string format = "csv";
  double delay_fs = 0.0;
  std::uint64_t realizations = 100000;
  std::uint64_t seed = 1;
  std::size_t delays = 64;
  double z = 4.0;

  auto* simulate = app.add_subcommand("simulate", "scan g2 over the configured delay grid");
  src.attach(simulate);
  simulate->add_option("--out", out, "output file")->required();
  simulate->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* decompose = app.add_subcommand("decompose", "16-bar breakdown at one delay");
  src.attach(decompose);
  decompose->add_option("--delay-fs", delay_fs, "delay in femtoseconds")->required();
  decompose->add_option("--out", out, "output file")->required();
  decompose->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo estimate of g2");
  src.attach(oracle);
  oracle->add_option("--realizations", realizations)->required()->check(CLI::Range(
      std::uint64_t{100}, std::uint64_t{1} << 40));
  oracle->add_option("--seed", seed)->required();
  oracle->add_option("--out", out, "output file")->required();
  oracle->add_option("--delays", delays, "number of delays sampled from the grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  oracle->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* compare = app.add_subcommand("compare", "oracle vs closed form z-scores");
  src.attach(compare);
  compare->add_option("--realizations", realizations)->required()->check(CLI::Range(
      std::uint64_t{100}, std::uint64_t{1} << 40));
  compare->add_option("--seed", seed)->required();
  compare->add_option("--delays", delays, "number of delays sampled from the grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  compare->add_option("--z", z, "flag threshold on |z|")->check(CLI::PositiveNumber);
  compare->add_option("--out", out, "optional JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const auto config = src.load();
    if (simulate->parsed()) {
      tpmi::emit(tpmi::run_scan(config), tpmi::parse_format(format), out);
    } else if (decompose->parsed()) {
      tpmi::emit(tpmi::classify(config, delay_fs * 1e-15), tpmi::parse_format(format), out);
    } else if (oracle->parsed()) {
      if (oracle->count("--format") == 0)
        format = "json";
      const auto grid = compare_grid(config, delays);
      tpmi::emit(tpmi::run_oracle(config, grid, realizations, seed),
                 tpmi::parse_format(format), out);
    } else if (compare->parsed()) {
      const auto grid = compare_grid(config, delays);
      const auto rep = tpmi::compare_trace(config, grid, realizations, seed, z);
      if (!out.empty())
        tpmi::emit(rep, tpmi::Format::json, out);
      std::printf("%s: %zu delays, %llu realizations, seed %llu, max |z| = %.3f, flags = %zu\n",
                  rep.passed() ? "PASS" : "FAIL", rep.rows.size(),
                  static_cast<unsigned long long>(realizations),
                  static_cast<unsigned long long>(seed), rep.max_abs_z, rep.flags);
      return rep.passed() ? kOk : kCompareFail;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tpmi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const tpmi::ValidationError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kValidation;
  } catch (const tpmi::DegenerateNormalization& e) {
    std::cerr << "degenerate configuration: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

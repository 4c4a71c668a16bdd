#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tpmi/config.hpp"
#include "tpmi/decomposition.hpp"
#include "tpmi/oracle.hpp"
#include "tpmi/scan.hpp"

namespace tpmi {

enum class Format { csv, json };

Format parse_format(std::string_view name);

/// Config document:
///   {"name": "...", "source": {"center_wavelength_nm", "bandwidth_nm", "shape"},
///    "source_power": 1, "polarizers": {"p0".."p3": degrees|null},
///    "angle_convention": "physical"|"effective", "blocked_arm": null|1|2,
///    "scan": {"delay_min_fs", "delay_max_fs", "points"}}
/// Every key is optional; unknown keys are a ValidationError.
InterferometerConfig parse_config(std::string_view text);
InterferometerConfig load_config(const std::string& path);

/// Canonical physical-convention form; parse_config(to_json(c)) == c.
nlohmann::json config_to_json(const InterferometerConfig& config);

inline constexpr const char* kTraceHeader = "delay_fs,g2,background,hbt,omega,two_omega";

void write_trace(std::ostream& os, const ScanTrace& trace, Format format);
void write_breakdown(std::ostream& os, const ComponentBreakdown& breakdown, Format format);
void write_oracle(std::ostream& os, const OracleRun& run, Format format);
void write_compare(std::ostream& os, const CompareReport& report, Format format);

/// Rows only; metadata is not restored from CSV.
std::vector<ScanRow> read_trace_csv(std::istream& is);
ScanTrace read_trace_json(std::istream& is);

/// Writes to `path`; throws IoError if it cannot be opened or written.
void emit(const ScanTrace& trace, Format format, const std::string& path);
void emit(const ComponentBreakdown& breakdown, Format format, const std::string& path);
void emit(const OracleRun& run, Format format, const std::string& path);
void emit(const CompareReport& report, Format format, const std::string& path);

std::string format_double(double x);

} // namespace tpmi

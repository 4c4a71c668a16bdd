#include "tpmi/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "tpmi/errors.hpp"
#include "tpmi/jones.hpp"

namespace tpmi {

using nlohmann::json;

namespace {

constexpr double kFsPerSecond = 1e15;
constexpr double kNmPerMeter = 1e9;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      ok = ok || key == a;
    if (!ok)
      throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

const json& require_object(const json& j, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + " must be an object");
  return j;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number())
    throw ParseError(where + " must be a number");
  return j.get<double>();
}

std::optional<double> angle(const json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null())
    return std::nullopt;
  const double deg = number(obj.at(key), std::string("polarizers.") + key);
  if (!std::isfinite(deg))
    throw ValidationError(std::string("polarizers.") + key + " must be finite");
  return radians(deg);
}

json angle_json(const std::optional<double>& a) {
  return a ? json(degrees(*a)) : json(nullptr);
}

void write_json(std::ostream& os, const json& j) {
  // nlohmann writes the shortest representation that round-trips.
  os << j.dump(2) << '\n';
}

template <class F>
void emit_to(const std::string& path, F&& write) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw IoError("cannot open '" + path + "' for writing");
  write(os);
  os.flush();
  if (!os)
    throw IoError("write to '" + path + "' failed");
}

json row_json(const ScanRow& r) {
  return {{"delay_fs", r.delay * kFsPerSecond}, {"g2", r.g2},       {"background", r.background},
          {"hbt", r.hbt},              {"omega", r.omega}, {"two_omega", r.two_omega}};
}

} // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Format parse_format(std::string_view name) {
  if (name == "csv")
    return Format::csv;
  if (name == "json")
    return Format::json;
  throw ValidationError("unknown format '" + std::string(name) + "'");
}

InterferometerConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  require_object(doc, "config");
  reject_unknown(doc,
                 {"name", "source", "source_power", "polarizers", "angle_convention",
                  "blocked_arm", "scan"},
                 "config");

  InterferometerConfig c;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError("name must be a string");
    c.name = doc["name"].get<std::string>();
  }
  if (doc.contains("source")) {
    const auto& s = require_object(doc["source"], "source");
    reject_unknown(s, {"center_wavelength_nm", "bandwidth_nm", "shape"}, "source");
    if (s.contains("center_wavelength_nm"))
      c.source.center_wavelength =
          number(s["center_wavelength_nm"], "source.center_wavelength_nm") / kNmPerMeter;
    if (s.contains("bandwidth_nm"))
      c.source.bandwidth_fwhm = number(s["bandwidth_nm"], "source.bandwidth_nm") / kNmPerMeter;
    if (s.contains("shape")) {
      if (!s["shape"].is_string())
        throw ParseError("source.shape must be a string");
      if (s["shape"] != "gaussian")
        throw ValidationError("unsupported source.shape '" +
                              s["shape"].get<std::string>() + "'");
    }
  }
  if (doc.contains("source_power"))
    c.source_power = number(doc["source_power"], "source_power");

  std::string convention = "physical";
  if (doc.contains("angle_convention")) {
    if (!doc["angle_convention"].is_string())
      throw ParseError("angle_convention must be a string");
    convention = doc["angle_convention"].get<std::string>();
    if (convention != "physical" && convention != "effective")
      throw ValidationError("angle_convention must be 'physical' or 'effective'");
  }
  if (doc.contains("polarizers")) {
    const auto& p = require_object(doc["polarizers"], "polarizers");
    reject_unknown(p, {"p0", "p1", "p2", "p3"}, "polarizers");
    c.polarizers.p0 = angle(p, "p0");
    c.polarizers.p1 = angle(p, "p1");
    c.polarizers.p2 = angle(p, "p2");
    c.polarizers.p3 = angle(p, "p3");
  }
  if (convention == "effective" && c.polarizers.p1)
    c.polarizers.p1 = flip_axis(*c.polarizers.p1);

  if (doc.contains("blocked_arm") && !doc["blocked_arm"].is_null()) {
    const auto& b = doc["blocked_arm"];
    if (!b.is_number_integer())
      throw ParseError("blocked_arm must be null, 1 or 2");
    const auto v = b.get<long long>();
    if (v != 1 && v != 2)
      throw ValidationError("blocked_arm must be null, 1 or 2");
    c.blocked_arm = v == 1 ? Arm::one : Arm::two;
  }
  if (doc.contains("scan")) {
    const auto& s = require_object(doc["scan"], "scan");
    reject_unknown(s, {"delay_min_fs", "delay_max_fs", "points"}, "scan");
    if (s.contains("delay_min_fs"))
      c.scan.delay_min = number(s["delay_min_fs"], "scan.delay_min_fs") / kFsPerSecond;
    if (s.contains("delay_max_fs"))
      c.scan.delay_max = number(s["delay_max_fs"], "scan.delay_max_fs") / kFsPerSecond;
    if (s.contains("points")) {
      if (!s["points"].is_number_integer())
        throw ParseError("scan.points must be an integer");
      const auto n = s["points"].get<long long>();
      if (n < 2)
        throw ValidationError("scan.points must be at least 2");
      c.scan.points = static_cast<std::size_t>(n);
    }
  }
  c.validate();
  return c;
}

InterferometerConfig load_config(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is)
    throw IoError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

json config_to_json(const InterferometerConfig& c) {
  json j;
  j["name"] = c.name;
  j["source"] = {{"center_wavelength_nm", c.source.center_wavelength * kNmPerMeter},
                 {"bandwidth_nm", c.source.bandwidth_fwhm * kNmPerMeter},
                 {"shape", "gaussian"}};
  j["source_power"] = c.source_power;
  j["polarizers"] = {{"p0", angle_json(c.polarizers.p0)},
                     {"p1", angle_json(c.polarizers.p1)},
                     {"p2", angle_json(c.polarizers.p2)},
                     {"p3", angle_json(c.polarizers.p3)}};
  j["angle_convention"] = "physical";
  j["blocked_arm"] = c.blocked_arm ? json(static_cast<int>(*c.blocked_arm)) : json(nullptr);
  j["scan"] = {{"delay_min_fs", c.scan.delay_min * kFsPerSecond},
               {"delay_max_fs", c.scan.delay_max * kFsPerSecond},
               {"points", c.scan.points}};
  return j;
}

void write_trace(std::ostream& os, const ScanTrace& trace, Format format) {
  if (format == Format::csv) {
    os << kTraceHeader << '\n';
    for (const auto& r : trace.rows)
      os << format_double(r.delay * kFsPerSecond) << ',' << format_double(r.g2) << ','
         << format_double(r.background) << ',' << format_double(r.hbt) << ','
         << format_double(r.omega) << ',' << format_double(r.two_omega) << '\n';
    return;
  }
  json rows = json::array();
  for (const auto& r : trace.rows)
    rows.push_back(row_json(r));
  write_json(os, {{"version", trace.version},
                  {"preset", trace.config.name},
                  {"config", config_to_json(trace.config)},
                  {"rows", rows}});
}

void write_breakdown(std::ostream& os, const ComponentBreakdown& b, Format format) {
  if (format == Format::csv) {
    os << "label,class,value\n";
    for (const auto& bar : b.bars)
      os << bar.label << ',' << to_string(bar.cls) << ',' << format_double(bar.value) << '\n';
    return;
  }
  json bars = json::array();
  for (const auto& bar : b.bars)
    bars.push_back({{"label", bar.label}, {"class", to_string(bar.cls)}, {"value", bar.value}});
  write_json(os, {{"delay_fs", b.tau_d * kFsPerSecond},
                  {"background", b.background},
                  {"hbt", b.hbt},
                  {"omega", b.omega},
                  {"two_omega", b.two_omega},
                  {"total", b.total()},
                  {"imaginary_residual", b.imaginary_residual},
                  {"bars", bars}});
}

void write_oracle(std::ostream& os, const OracleRun& run, Format format) {
  if (format == Format::csv) {
    os << "delay_fs,mean,standard_error\n";
    for (std::size_t i = 0; i < run.delays.size(); ++i)
      os << format_double(run.delays[i] * kFsPerSecond) << ','
         << format_double(run.estimates[i].mean) << ','
         << format_double(run.estimates[i].standard_error) << '\n';
    return;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < run.delays.size(); ++i)
    rows.push_back({{"delay_fs", run.delays[i] * kFsPerSecond},
                    {"mean", run.estimates[i].mean},
                    {"standard_error", run.estimates[i].standard_error}});
  write_json(os, {{"version", kLibraryVersion},
                  {"config_hash", run.config_hash},
                  {"master_seed", run.master_seed},
                  {"realizations", run.realizations},
                  {"rows", rows}});
}

void write_compare(std::ostream& os, const CompareReport& rep, Format format) {
  if (format == Format::csv) {
    os << "delay_fs,mc_mean,mc_standard_error,closed_form,z,flagged\n";
    for (const auto& r : rep.rows)
      os << format_double(r.delay * kFsPerSecond) << ',' << format_double(r.mc_mean) << ','
         << format_double(r.mc_standard_error) << ',' << format_double(r.closed_form) << ','
         << format_double(r.z) << ',' << (r.flagged ? 1 : 0) << '\n';
    return;
  }
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"delay_fs", r.delay * kFsPerSecond},
                    {"mc_mean", r.mc_mean},
                    {"mc_standard_error", r.mc_standard_error},
                    {"closed_form", r.closed_form},
                    {"z", std::isfinite(r.z) ? json(r.z) : json(r.z > 0 ? "inf" : "-inf")},
                    {"flagged", r.flagged}});
  write_json(os, {{"version", kLibraryVersion},
                  {"config_hash", rep.config_hash},
                  {"master_seed", rep.master_seed},
                  {"realizations", rep.realizations},
                  {"z_threshold", rep.z_threshold},
                  {"max_abs_z", std::isfinite(rep.max_abs_z) ? json(rep.max_abs_z)
                                                             : json("inf")},
                  {"flags", rep.flags},
                  {"passed", rep.passed()},
                  {"rows", rows}});
}

std::vector<ScanRow> read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTraceHeader)
    throw ParseError("trace CSV header mismatch");
  std::vector<ScanRow> rows;
  while (std::getline(is, line)) {
    if (line.empty())
      continue;
    std::array<double, 6> v{};
    std::size_t pos = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto next = line.find(',', pos);
      const std::string field = line.substr(pos, next - pos);
      char* end = nullptr;
      v[k] = std::strtod(field.c_str(), &end);
      if (field.empty() || *end != '\0')
        throw ParseError("bad trace CSV field '" + field + "'");
      if ((next == std::string::npos) != (k + 1 == v.size()))
        throw ParseError("trace CSV row must have 6 fields");
      pos = next + 1;
    }
    rows.push_back({v[0] / kFsPerSecond, v[1], v[2], v[3], v[4], v[5]});
  }
  return rows;
}

ScanTrace read_trace_json(std::istream& is) {
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed trace JSON: ") + e.what());
  }
  ScanTrace t;
  t.version = doc.at("version").get<std::string>();
  t.config = parse_config(doc.at("config").dump());
  for (const auto& r : doc.at("rows"))
    t.rows.push_back({r.at("delay_fs").get<double>() / kFsPerSecond, r.at("g2").get<double>(),
                      r.at("background").get<double>(), r.at("hbt").get<double>(),
                      r.at("omega").get<double>(), r.at("two_omega").get<double>()});
  return t;
}

void emit(const ScanTrace& trace, Format format, const std::string& path) {
  emit_to(path, [&](std::ostream& os) { write_trace(os, trace, format); });
}
void emit(const ComponentBreakdown& b, Format format, const std::string& path) {
  emit_to(path, [&](std::ostream& os) { write_breakdown(os, b, format); });
}
void emit(const OracleRun& run, Format format, const std::string& path) {
  emit_to(path, [&](std::ostream& os) { write_oracle(os, run, format); });
}
void emit(const CompareReport& rep, Format format, const std::string& path) {
  emit_to(path, [&](std::ostream& os) { write_compare(os, rep, format); });
}

} // namespace tpmi

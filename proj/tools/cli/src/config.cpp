#include "inerton/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace inerton::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"model.M0", [](RunConfig& c, auto& k, auto& v) { c.model.M0 = to_double(k, v); }},
      {"model.v0", [](RunConfig& c, auto& k, auto& v) { c.model.v0 = to_double(k, v); }},
      {"model.c", [](RunConfig& c, auto& k, auto& v) { c.model.c = to_double(k, v); }},
      {"model.T", [](RunConfig& c, auto& k, auto& v) { c.model.T = to_double(k, v); }},
      {"model.N", [](RunConfig& c, auto& k, auto& v) { c.model.N = to_int(k, v); }},
      {"model.h",
       [](RunConfig& c, auto& k, auto& v) {
         if (v == "derived") {
           c.model.h_mode = HDerived{};
         } else {
           c.model.h_mode = HGiven{to_double(k, v)};
         }
       }},
      {"model.half_periods",
       [](RunConfig& c, auto& k, auto& v) {
         c.half_periods.overrides.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) {
           c.half_periods.overrides.push_back(to_double(k, trim(item)));
         }
       }},
      {"integrator.method",
       [](RunConfig& c, auto& k, auto& v) {
         if (v == "rk4") {
           c.integrator.method = StepMethod::Rk4;
         } else if (v == "dp45") {
           c.integrator.method = StepMethod::DormandPrince45;
         } else {
           throw ConfigError(k + ": expected rk4 or dp45, got '" + v + "'");
         }
       }},
      {"integrator.step", [](RunConfig& c, auto& k, auto& v) { c.integrator.step = to_double(k, v); }},
      {"integrator.rel_tol",
       [](RunConfig& c, auto& k, auto& v) { c.integrator.rel_tol = to_double(k, v); }},
      {"integrator.abs_tol",
       [](RunConfig& c, auto& k, auto& v) { c.integrator.abs_tol = to_double(k, v); }},
      {"integrator.event_mode",
       [](RunConfig& c, auto& k, auto& v) {
         if (v == "scheduled") {
           c.integrator.event_mode = EventMode::Scheduled;
         } else if (v == "detected") {
           c.integrator.event_mode = EventMode::Detected;
         } else {
           throw ConfigError(k + ": expected scheduled or detected, got '" + v + "'");
         }
       }},
      {"integrator.event_tol",
       [](RunConfig& c, auto& k, auto& v) { c.integrator.event_tol = to_double(k, v); }},
      {"integrator.constraint_tol",
       [](RunConfig& c, auto& k, auto& v) { c.integrator.constraint_tol = to_double(k, v); }},
      {"integrator.monitor_constraints",
       [](RunConfig& c, auto& k, auto& v) { c.integrator.monitor_constraints = to_bool(k, v); }},
      {"integrator.oracle_tol", [](RunConfig& c, auto& k, auto& v) { c.oracle_tol = to_double(k, v); }},
      {"grid.t_end", [](RunConfig& c, auto& k, auto& v) { c.t_end = to_double(k, v); }},
      {"grid.samples_per_period",
       [](RunConfig& c, auto& k, auto& v) { c.samples_per_period = to_int(k, v); }},
      {"report.format", [](RunConfig& c, auto&, auto& v) { c.format = parse_format(v); }},
      {"output.dir", [](RunConfig& c, auto&, auto& v) { c.output_dir = v; }},
      {"verify.inject_failure",
       [](RunConfig& c, auto& k, auto& v) { c.inject_failure = to_bool(k, v); }},
  };
  return table;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw ConfigError("report format must be text or json, got '" + name + "'");
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    }
    try {
      it->second(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  return parse_config(in);
}

void validate(const RunConfig& cfg) {
  (void)derive_quantities(cfg.model);
  if (!cfg.half_periods.overrides.empty()) {
    (void)ensemble_velocities(cfg.model, cfg.half_periods);
  }
  if (cfg.samples_per_period < 2) {
    throw ConfigError("grid.samples_per_period must be >= 2");
  }
  if (!(cfg.t_end > 0.0) || cfg.t_end > 1000.0) {
    throw ConfigError("grid.t_end must lie in (0, 1000] half-periods");
  }
  const double rows = cfg.t_end * cfg.samples_per_period;
  if (std::abs(rows - std::round(rows)) > 1e-9 * rows) {
    throw ConfigError("grid.t_end must be a whole number of sampling steps");
  }
  if (!(cfg.integrator.step > 0.0) || !(cfg.integrator.rel_tol > 0.0) ||
      !(cfg.integrator.abs_tol > 0.0) || !(cfg.integrator.event_tol > 0.0) ||
      !(cfg.integrator.constraint_tol > 0.0) || !(cfg.oracle_tol > 0.0)) {
    throw ConfigError("integrator step and tolerances must be > 0");
  }
  if (cfg.integrator.method == StepMethod::Rk4) {
    const double per_sample = 1.0 / (cfg.samples_per_period * cfg.integrator.step);
    if (per_sample < 1.0 - 1e-9 || std::abs(per_sample - std::round(per_sample)) > 1e-9 * per_sample) {
      throw ConfigError(
          "integrator.step must divide the sampling interval 1/samples_per_period evenly");
    }
  }
}

IntegratorConfig resolved_integrator(const RunConfig& cfg, double T) {
  IntegratorConfig out = cfg.integrator;
  if (out.method == StepMethod::Rk4) {
    const double per_sample = 1.0 / (cfg.samples_per_period * cfg.integrator.step);
    out.step = cfg.integrator.step * T;
    out.output_stride = static_cast<int>(std::lround(per_sample));
  } else {
    out.step = T / cfg.samples_per_period;
    out.output_stride = 1;
  }
  return out;
}

}  // namespace inerton::cli

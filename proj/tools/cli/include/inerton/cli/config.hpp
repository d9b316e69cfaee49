#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "inerton/dynamics.hpp"
#include "inerton/model.hpp"

namespace inerton::cli {

enum class ReportFormat { Text, Json };

/// Everything a scenario needs. Times in the grid and integrator sections are
/// expressed in units of the half-period T.
struct RunConfig {
  ModelParams model;
  HalfPeriodRule half_periods;
  IntegratorConfig integrator;  ///< step is a fraction of T
  double t_end = 10.0;
  int samples_per_period = 100;
  double oracle_tol = 1e-7;
  ReportFormat format = ReportFormat::Text;
  std::string output_dir;
  bool inject_failure = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `section.key = value` lines; `#` starts a comment. Unknown keys,
/// duplicate keys and malformed values throw ConfigError naming the line.
/// Physical validity is checked separately by validate().
RunConfig parse_config(std::istream& in);

/// Throws ConfigError when the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Resolves the model (DomainError) and checks the grid and integrator
/// settings (ConfigError).
void validate(const RunConfig& cfg);

ReportFormat parse_format(const std::string& name);

/// Integrator settings in absolute time for the resolved half-period, with
/// the output stride that yields samples_per_period rows per period.
IntegratorConfig resolved_integrator(const RunConfig& cfg, double T);

}  // namespace inerton::cli

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "inerton/cli/config.hpp"
#include "inerton/cli/report.hpp"

namespace inerton::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitVerification = 2,
  kExitIo = 3,
};

/// A named output file held in memory until it is written.
struct Artifact {
  std::string filename;
  std::string content;
};

struct ScenarioResult {
  std::vector<Artifact> files;
  bool passed = true;
  std::string summary;  ///< one line for the console
};

ScenarioResult analytic_scenario(const RunConfig& cfg);
ScenarioResult integrate_scenario(const RunConfig& cfg);
ScenarioResult verify_scenario(const RunConfig& cfg);
ScenarioResult figures_scenario(const RunConfig& cfg);
ScenarioResult quantize_scenario(const RunConfig& cfg);

/// Runs every check and records the documented discrepancies.
VerificationReport build_report(const RunConfig& cfg);

/// SVG with four stacked panels: X'(t), X(t), x(t), x'(t) over four periods.
std::string trajectory_figure(const DerivedQuantities& dq, int samples_per_period);

/// SVG of the cloud distance against particle position with lambda and
/// Lambda/pi marked.
std::string period_schematic(const DerivedQuantities& dq, int samples_per_period);

const std::vector<std::string>& scenario_names();

/// Executes a scenario and writes its artifacts into out_dir, creating it if
/// needed. Messages go to `log`, errors to `err`. Returns an ExitCode.
int run_scenario(const std::string& scenario, const RunConfig& cfg,
                 const std::filesystem::path& out_dir, std::ostream& log, std::ostream& err);

}  // namespace inerton::cli

#include "inerton/cli/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "inerton/cli/csv.hpp"
#include "inerton/inerton.hpp"

namespace inerton::cli {
namespace {

std::string key_values(const std::vector<std::pair<std::string, double>>& rows,
                       ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    for (const auto& [k, v] : rows) {
      doc[k] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << " = " << format_compact(v) << '\n';
  return out.str();
}

std::string summary_name(const std::string& stem, ReportFormat format) {
  return stem + (format == ReportFormat::Json ? ".json" : ".txt");
}

std::vector<double> sampling_grid(const RunConfig& cfg, double T) {
  return uniform_grid(0.0, cfg.t_end * T, cfg.samples_per_period, T);
}

}  // namespace

ScenarioResult analytic_scenario(const RunConfig& cfg) {
  validate(cfg);
  const DerivedQuantities dq = derive_quantities(cfg.model);
  TrajectorySeries series = sample_trajectory(sampling_grid(cfg, dq.T), dq);
  annotate(series, dq);
  std::ostringstream csv;
  write_trajectory_csv(csv, series);
  ScenarioResult out;
  out.files.push_back({"analytic.csv", csv.str()});
  out.summary = "analytic: " + std::to_string(series.samples.size()) + " samples";
  return out;
}

ScenarioResult integrate_scenario(const RunConfig& cfg) {
  validate(cfg);
  const DerivedQuantities dq = derive_quantities(cfg.model);
  const IntegratorConfig ic = resolved_integrator(cfg, dq.T);
  IntegrationRun run = integrate(canonical_start(dq), 0.0, cfg.t_end * dq.T, dq, ic);
  annotate(run.series, dq);

  std::vector<std::vector<double>> errors;
  double eX = 0.0, eXd = 0.0, ex = 0.0, exd = 0.0;
  for (const SystemState& s : run.series.samples) {
    const SystemState a = analytic_state(s.t, dq);
    const double dX = std::abs(s.X - a.X);
    const double dXd = std::abs(s.Xdot - a.Xdot);
    const double dx = std::abs(s.x - a.x);
    const double dxd = std::abs(s.xdot - a.xdot);
    eX = std::max(eX, dX);
    eXd = std::max(eXd, dXd);
    ex = std::max(ex, dx);
    exd = std::max(exd, dxd);
    errors.push_back({s.t, dX, dXd, dx, dxd, std::max({dX, dXd, dx, dxd})});
  }
  const double worst = std::max({eX, eXd, ex, exd});
  double velocity_gap = 0.0;
  double distance_gap = 0.0;
  for (const ReflectionEvent& ev : run.events) {
    velocity_gap = std::max(velocity_gap, ev.velocity_gap);
    distance_gap = std::max(distance_gap, ev.distance_gap);
  }

  ScenarioResult out;
  std::ostringstream csv;
  write_trajectory_csv(csv, run.series);
  out.files.push_back({"integrate.csv", csv.str()});
  std::ostringstream err_csv;
  write_table_csv(err_csv, {"t", "err_X", "err_Xdot", "err_x", "err_xdot", "err_max"}, errors);
  out.files.push_back({"integrate_oracle_error.csv", err_csv.str()});
  out.passed = worst <= cfg.oracle_tol;
  out.files.push_back({summary_name("integrate_summary", cfg.format),
                       key_values({{"samples", static_cast<double>(run.series.samples.size())},
                                   {"events", static_cast<double>(run.events.size())},
                                   {"accepted_steps", static_cast<double>(run.accepted_steps)},
                                   {"rejected_steps", static_cast<double>(run.rejected_steps)},
                                   {"max_error_X", eX},
                                   {"max_error_Xdot", eXd},
                                   {"max_error_x", ex},
                                   {"max_error_xdot", exd},
                                   {"max_error", worst},
                                   {"oracle_tol", cfg.oracle_tol},
                                   {"max_event_velocity_gap", velocity_gap},
                                   {"max_event_distance_gap", distance_gap},
                                   {"passed", out.passed ? 1.0 : 0.0}},
                                  cfg.format)});
  out.summary = "integrate: " + std::to_string(run.series.samples.size()) +
                " samples, max oracle error " + format_short(worst) +
                (out.passed ? " (within " : " (exceeds ") + format_short(cfg.oracle_tol) + ")";
  return out;
}

ScenarioResult verify_scenario(const RunConfig& cfg) {
  const VerificationReport rep = build_report(cfg);
  ScenarioResult out;
  out.files.push_back({summary_name("verify_report", cfg.format), render(rep, cfg.format)});
  out.passed = rep.passed();
  const auto passed = std::count_if(rep.checks.begin(), rep.checks.end(),
                                    [](const Check& c) { return c.passed; });
  out.summary = std::string("verify: ") + (out.passed ? "PASS" : "FAIL") + " (" +
                std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks, " +
                std::to_string(rep.discrepancies.size()) + " documented discrepancies)";
  return out;
}

ScenarioResult figures_scenario(const RunConfig& cfg) {
  validate(cfg);
  const DerivedQuantities dq = derive_quantities(cfg.model);
  ScenarioResult out;
  out.files.push_back({"figure_trajectory.svg", trajectory_figure(dq, cfg.samples_per_period)});
  out.files.push_back({"figure_periods.svg", period_schematic(dq, cfg.samples_per_period)});
  out.summary = "figures: 2 SVG files";
  return out;
}

ScenarioResult quantize_scenario(const RunConfig& cfg) {
  validate(cfg);
  const DerivedQuantities dq = derive_quantities(cfg.model);
  const ActionResult table = action_table(dq.E, dq.M, dq.T, 51);
  std::vector<std::vector<double>> rows;
  const double w = std::numbers::pi / dq.T;
  for (std::size_t i = 0; i < table.X.size(); ++i) {
    const double X = table.X[i];
    const double p = std::sqrt(std::max(0.0, 2.0 * dq.M * (dq.E - dq.M * w * w * X * X / 2.0)));
    rows.push_back(
        {X, table.S1[i], shortened_action_closed_form(X, dq.E, dq.M, dq.T), p});
  }
  std::ostringstream csv;
  write_table_csv(csv, {"X", "S1", "S1_closed_form", "p"}, rows);

  const DeBroglie db = de_broglie(dq);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ScenarioResult out;
  out.files.push_back({"quantize_action.csv", csv.str()});
  out.files.push_back({summary_name("quantize_summary", cfg.format),
                       key_values({{"E", dq.E},
                                   {"M", dq.M},
                                   {"T", dq.T},
                                   {"X_max", table.X_max},
                                   {"J", table.J},
                                   {"two_E_T", 2.0 * dq.E * dq.T},
                                   {"h", dq.h},
                                   {"hbar", dq.h / (2.0 * std::numbers::pi)},
                                   {"wavelength", db.wavelength.value_or(nan)},
                                   {"lambda", dq.lambda},
                                   {"nu", db.nu},
                                   {"wavelength_residual", db.wavelength_residual},
                                   {"nu_residual", db.nu_residual},
                                   {"total_energy_frequency", db.total_energy_frequency}},
                                  cfg.format)});
  out.summary = "quantize: J = " + format_short(table.J) + ", h = " + format_short(dq.h);
  return out;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"analytic", "integrate", "verify", "figures",
                                              "quantize"};
  return names;
}

int run_scenario(const std::string& scenario, const RunConfig& cfg,
                 const std::filesystem::path& out_dir, std::ostream& log, std::ostream& err) {
  ScenarioResult result;
  try {
    if (scenario == "analytic") {
      result = analytic_scenario(cfg);
    } else if (scenario == "integrate") {
      result = integrate_scenario(cfg);
    } else if (scenario == "verify") {
      result = verify_scenario(cfg);
    } else if (scenario == "figures") {
      result = figures_scenario(cfg);
    } else if (scenario == "quantize") {
      result = quantize_scenario(cfg);
    } else {
      err << "error: unknown scenario '" << scenario << "'\n";
      return kExitConfig;
    }
  } catch (const IntegrationError& e) {
    err << "integration failed: " << e.what() << " (last good t = "
        << format_short(e.last_good_time()) << ")\n";
    return kExitVerification;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateSystemError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string());
    for (const Artifact& a : result.files) {
      write_file(out_dir / a.filename, a.content);
      log << "wrote " << (out_dir / a.filename).string() << '\n';
    }
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  log << result.summary << '\n';
  return result.passed ? kExitOk : kExitVerification;
}

}  // namespace inerton::cli

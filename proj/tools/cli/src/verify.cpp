#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "inerton/cli/csv.hpp"
#include "inerton/cli/scenarios.hpp"
#include "inerton/inerton.hpp"

namespace inerton::cli {
namespace {

constexpr double kPi = std::numbers::pi;

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

double max_state_error(const IntegrationRun& run, const DerivedQuantities& dq) {
  double worst = 0.0;
  for (const SystemState& s : run.series.samples) {
    const SystemState a = analytic_state(s.t, dq);
    worst = std::max({worst, std::abs(s.X - a.X), std::abs(s.Xdot - a.Xdot),
                      std::abs(s.x - a.x), std::abs(s.xdot - a.xdot)});
  }
  return worst;
}

IntegratorConfig fixed_step(const RunConfig& cfg, double step) {
  IntegratorConfig out = cfg.integrator;
  out.method = StepMethod::Rk4;
  out.event_mode = EventMode::Scheduled;
  out.step = step;
  out.output_stride = 1;
  return out;
}

std::string periods(double t_end) { return format_compact(t_end) + " T"; }

void oracle_checks(VerificationReport& rep, const RunConfig& cfg, const DerivedQuantities& dq) {
  const double h = cfg.integrator.step * dq.T;
  const double t_end = cfg.t_end * dq.T;
  const double fine = max_state_error(
      integrate(canonical_start(dq), 0.0, t_end, dq, fixed_step(cfg, h)), dq);
  rep.checks.push_back(make_check(
      "ode_vs_analytic",
      "max over [0, " + periods(cfg.t_end) + "] of |numeric - closed form| in X, X', x, x'; RK4 step " +
          format_compact(cfg.integrator.step) + " T",
      fine, 1e-7));

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 4.0 * dq.T * (i + 0.5) / 1000.0;
    const ResidualPair r = analytic_residual(t, dq);
    worst = std::max({worst, std::abs(r.r1), std::abs(r.r2)});
  }
  rep.checks.push_back(make_check(
      "closed_form_residuals",
      "X'' + (pi/T)(v0/c) x' = 0 and x'' - (pi/T)(c/v0)(X' - v0) = 0 at 1000 interior points of 4 periods",
      worst, 1e-12));

  const double coarse = max_state_error(
      integrate(canonical_start(dq), 0.0, t_end, dq, fixed_step(cfg, 2.0 * h)), dq);
  const double ratio = coarse / fine;
  rep.checks.push_back(make_check("convergence_order",
                                  "|err(2h) / err(h) - 16| for the RK4 oracle run",
                                  std::abs(ratio - 16.0), 4.0,
                                  "ratio = " + format_short(ratio)));
}

void action_checks(VerificationReport& rep, const DerivedQuantities& dq) {
  const double J = cyclic_action(dq.E, dq.M, dq.T);
  const double target = 2.0 * dq.E * dq.T;
  rep.checks.push_back(make_check("cyclic_action",
                                  "|J - 2 E T| / (2 E T), J = loop integral of p dX over 2T",
                                  std::abs(J - target) / target, 1e-10,
                                  "J = " + format_short(J)));

  const double X_max = turning_point(dq.E, dq.M, dq.T);
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double X = X_max * i / 51.0;
    const double q = shortened_action(X, dq.E, dq.M, dq.T);
    const double c = shortened_action_closed_form(X, dq.E, dq.M, dq.T);
    worst = std::max(worst, std::abs(q - c) / c);
  }
  rep.checks.push_back(make_check(
      "shortened_action",
      "quadrature of sqrt(2M[E - M(pi/T)^2 X^2/2]) vs (E T/pi)[asin u + u sqrt(1 - u^2)], 50 points",
      worst, 1e-9));
}

void de_broglie_checks(VerificationReport& rep) {
  Uniform draw(0x5eed0001);
  double momentum = 0.0;
  double energy = 0.0;
  for (int i = 0; i < 20; ++i) {
    ModelParams p;
    p.v0 = draw(0.01, 0.99);
    p.M0 = draw(0.1, 10.0);
    p.T = draw(0.1, 10.0);
    const DerivedQuantities dq = derive_quantities(p);
    const DeBroglie db = de_broglie(dq);
    momentum = std::max(momentum, std::abs(dq.h / *db.wavelength - dq.p0) / dq.p0);
    energy = std::max(energy, std::abs(dq.E - dq.h * db.nu) / dq.E);
  }
  rep.checks.push_back(make_check("de_broglie_momentum",
                                  "|h/lambda - M v0| / (M v0), 20 random sets, v0 in [0.01, 0.99] c",
                                  momentum, 1e-12));
  rep.checks.push_back(make_check("de_broglie_energy",
                                  "|E - h nu| / E, 20 random sets, v0 in [0.01, 0.99] c", energy,
                                  1e-12));
}

void schrodinger_checks(VerificationReport& rep, const DerivedQuantities& dq) {
  std::vector<WavePoint> grid;
  WaveSpec w = wave_spec(dq);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) {
      grid.push_back({4.0 * w.lambda * i / 24.0, 4.0 * dq.T * j / 24.0});
    }
  }
  const SchrodingerResiduals r = schrodinger_residuals(w, dq.M, dq.E, grid);
  rep.checks.push_back(make_check("schrodinger_stationary",
                                  "max |(hbar^2/2M) psi'' + E psi| / (E |psi0|)", r.stationary,
                                  1e-13));
  rep.checks.push_back(make_check("schrodinger_time_dependent",
                                  "max |i hbar dpsi/dt + (hbar^2/2M) psi''| / (E |psi0|)",
                                  r.time_dependent, 1e-13));
  w.lambda *= 1.1;
  const SchrodingerResiduals bad = schrodinger_residuals(w, dq.M, dq.E, grid);
  rep.checks.push_back(make_check(
      "schrodinger_negative_control",
      "wavelength x1.1 must give a stationary residual of 1 - 1/1.21",
      std::abs(bad.stationary - (1.0 - 1.0 / 1.21)), 1e-3,
      "detected residual = " + format_short(bad.stationary)));
}

void relativity_checks(VerificationReport& rep, const DerivedQuantities& dq) {
  double rest = 0.0;
  double density = 0.0;
  double hydro = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double v0 = 0.999 * dq.c * i / 99.0;
    const double M = relativistic_mass(dq.M0, v0, dq.c);
    const double beta = v0 / dq.c;
    rest = std::max(rest, std::abs(M * std::sqrt((1.0 - beta) * (1.0 + beta)) - dq.M0) / dq.M0);
    const double ratio = M / dq.M0;
    density = std::max(density,
                       std::abs(density_transform(1.0, v0, dq.c) - ratio * ratio) / (ratio * ratio));
    for (HalfStage stage : {HalfStage::Decelerating, HalfStage::Accelerating}) {
      hydro = std::max(hydro, std::abs(hydrodynamic_residual(1.0, v0, dq.c, v0 * dq.T, dq.T, stage)));
    }
  }
  rep.checks.push_back(make_check("rest_mass_identity",
                                  "|M sqrt(1 - v0^2/c^2) - M0| / M0, 100 speeds up to 0.999 c",
                                  rest, 1e-12));
  rep.checks.push_back(make_check("density_identity",
                                  "|rho/rho0 - (M/M0)^2| / (M/M0)^2, 100 speeds up to 0.999 c",
                                  density, 1e-12));
  rep.checks.push_back(make_check("hydrodynamic_balance",
                                  "rho dv/dt = -c^2 drho/dl on (lambda/2, T/2), both half-stages",
                                  hydro, 1e-12));
  const double control =
      hydrodynamic_residual(1.0, dq.v0, dq.c, dq.lambda, dq.T, HalfStage::Decelerating, 1.0);
  rep.checks.push_back(make_check("hydrodynamic_negative_control",
                                  "rho = rho0 must leave a normalised imbalance of -1",
                                  std::abs(control + 1.0), 1e-12));
}

void structure_checks(VerificationReport& rep, const DerivedQuantities& dq) {
  double gap = 0.0;
  double speed = 0.0;
  double cloud = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double t = n * dq.T;
    gap = std::max(gap, std::abs(particle_position_on_branch(t, dq, n - 1) -
                                 particle_position_on_branch(t, dq, n)));
  }
  for (int n = 0; n <= 20; ++n) {
    speed = std::max(speed, std::abs(particle_velocity(n * dq.T, dq) - dq.v0));
    cloud = std::max(cloud, std::abs(cloud_position(n * dq.T, dq)));
  }
  double drift = 0.0;
  const double expected = dq.v0 * (1.0 - 2.0 / kPi);
  for (int n = 1; n <= 10; ++n) {
    const double t = 2.0 * n * dq.T;
    drift = std::max(drift, std::abs(particle_position(t, dq) / t - expected));
  }
  rep.checks.push_back(make_check("position_continuity",
                                  "|X(nT-) - X(nT+)| for n = 1..20", gap, 1e-12));
  rep.checks.push_back(make_check("velocity_resumes", "|X'(nT) - v0| for n = 0..20 (exact)",
                                  speed, 0.0));
  rep.checks.push_back(make_check("cloud_returns", "|x(nT)| / Lambda for n = 0..20",
                                  cloud / dq.Lambda, 1e-12));
  rep.checks.push_back(make_check("mean_drift", "|X(2nT)/(2nT) - v0(1 - 2/pi)| for n = 1..10",
                                  drift, 1e-10));
}

void energy_checks(VerificationReport& rep, const DerivedQuantities& dq) {
  std::vector<double> grid;
  for (int i = 0; i < 1000; ++i) grid.push_back(2.0 * dq.T * i / 999.0);
  const double dev = heff_conservation(dq.E, dq.M, dq.T, grid);
  rep.checks.push_back(make_check("heff_conservation",
                                  "max |Heff(t) - E| / E along X = A sin(pi t/T), 1000 samples",
                                  dev / dq.E, 1e-10));
  const double amp = oscillator_amplitude(dq.E, dq.M, dq.T);
  const double target = dq.lambda / kPi;
  rep.checks.push_back(make_check("oscillator_amplitude",
                                  "|A - lambda/pi| / (lambda/pi) with E = M v0^2/2",
                                  std::abs(amp - target) / target, 1e-12));
}

void ensemble_checks(VerificationReport& rep, const RunConfig& cfg) {
  const EnsembleVelocities ens = ensemble_velocities(cfg.model, cfg.half_periods);
  double rise = 0.0;
  for (std::size_t r = 1; r < ens.size(); ++r) {
    rise = std::max(rise, ens.v0r[r] - ens.v0r[r - 1]);
  }
  rep.checks.push_back(make_check("ensemble_monotone", "max(v0r[r+1] - v0r[r], 0)", rise, 0.0));
  rep.checks.push_back(make_check("ensemble_first", "|v0r[0] - v0| (exact)",
                                  std::abs(ens.v0r[0] - cfg.model.v0), 0.0));
  double worst = 0.0;
  for (std::size_t r = 0; r < ens.size(); ++r) {
    IntegratorConfig ic = fixed_step(cfg, cfg.integrator.step * ens.T_r[r]);
    const IntegrationRun run = integrate_inerton(r, ens, ic);
    for (const SystemState& s : run.series.samples) {
      const InertonPeriodState a = inerton_period_solution(r, std::min(s.t, ens.T_r[r]), ens);
      worst = std::max({worst, std::abs(s.X - a.X), std::abs(s.Xdot - a.Xdot),
                        std::abs(s.x - a.x_perp), std::abs(s.xdot - a.xdot_perp)});
    }
  }
  rep.checks.push_back(make_check(
      "ensemble_integration",
      "per-inerton RK4 run vs single-period closed forms, r = 0.." + std::to_string(ens.size() - 1),
      worst, 1e-7));
}

void determinism_check(VerificationReport& rep, const RunConfig& cfg) {
  const ScenarioResult a = integrate_scenario(cfg);
  const ScenarioResult b = integrate_scenario(cfg);
  const ScenarioResult c = analytic_scenario(cfg);
  const ScenarioResult d = analytic_scenario(cfg);
  double mismatched = 0.0;
  auto compare = [&](const ScenarioResult& x, const ScenarioResult& y) {
    if (x.files.size() != y.files.size()) {
      mismatched += 1.0;
      return;
    }
    for (std::size_t i = 0; i < x.files.size(); ++i) {
      if (x.files[i].content != y.files[i].content) mismatched += 1.0;
    }
  };
  compare(a, b);
  compare(c, d);
  rep.checks.push_back(make_check("output_determinism",
                                  "files differing between two identical integrate and analytic runs",
                                  mismatched, 0.0));
}

void discrepancies(VerificationReport& rep, const DerivedQuantities& dq) {
  Discrepancy radical;
  radical.name = "radical_constancy";
  radical.relation =
      "1 - [M0 X'^2 + m0 x'^2 - (2pi/T) sqrt(m0 M0)(X x' + v0 x)] / (M0 c^2) claimed constant";
  const double b2 = (dq.v0 / dq.c) * (dq.v0 / dq.c);
  radical.notes = "substituting the closed-form solutions gives a time-varying radical; expected " +
                  format_compact(1.0 - 2.0 * b2) + " at t = 0 and " + format_compact(1.0 + 2.0 * b2) +
                  " at t = T/2";
  double lo = INFINITY;
  double hi = -INFINITY;
  for (int i = 0; i <= 8; ++i) {
    const double t = dq.T * i / 8.0;
    const double value = lagrangian_17(analytic_state(t, dq), dq).radical;
    radical.profile.emplace_back("radical(" + format_compact(i / 8.0) + " T)", value);
  }
  for (int i = 0; i <= 1000; ++i) {
    const double value = lagrangian_17(analytic_state(2.0 * dq.T * i / 1000.0, dq), dq).radical;
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  radical.profile.emplace_back("min over [0, 2T]", lo);
  radical.profile.emplace_back("max over [0, 2T]", hi);
  rep.discrepancies.push_back(radical);

  Discrepancy ham;
  ham.name = "hamiltonian_forms";
  ham.relation = "H24 = M(pi/T)^2 X^2 + M c^2 + pi sqrt(m M0) v0 x/T vs H27 = p^2/M + p~^2/m + (M0 c)^2/M";
  ham.notes = "both printed forms evaluated verbatim along the closed-form trajectory; no equivalence asserted";
  double worst = 0.0;
  for (int i = 0; i <= 4; ++i) {
    const double t = dq.T * i / 4.0;
    const Hamiltonians h = hamiltonians(analytic_state(t, dq), dq);
    const std::string at = "(" + format_compact(i / 4.0) + " T)";
    ham.profile.emplace_back("H24" + at, h.H24);
    ham.profile.emplace_back("H27" + at, h.H27);
  }
  for (int i = 0; i <= 1000; ++i) {
    const Hamiltonians h = hamiltonians(analytic_state(2.0 * dq.T * i / 1000.0, dq), dq);
    worst = std::max(worst, std::abs(h.H24 - h.H27));
  }
  ham.profile.emplace_back("max |H24 - H27| over [0, 2T]", worst);
  rep.discrepancies.push_back(ham);

  Discrepancy combined;
  combined.name = "combined_hamiltonian";
  combined.relation = "H28 vs (H24 + H27)/2";
  combined.notes = "the cloud potential enters H28 with full weight rather than half";
  const Hamiltonians h = hamiltonians(analytic_state(0.5 * dq.T, dq), dq);
  combined.profile.emplace_back("H28(0.5 T)", h.H28);
  combined.profile.emplace_back("(H24 + H27)/2 at 0.5 T", 0.5 * (h.H24 + h.H27));
  rep.discrepancies.push_back(combined);
}

}  // namespace

VerificationReport build_report(const RunConfig& cfg) {
  validate(cfg);
  const DerivedQuantities dq = derive_quantities(cfg.model);
  VerificationReport rep;
  oracle_checks(rep, cfg, dq);
  action_checks(rep, dq);
  de_broglie_checks(rep);
  schrodinger_checks(rep, dq);
  relativity_checks(rep, dq);
  structure_checks(rep, dq);
  energy_checks(rep, dq);
  ensemble_checks(rep, cfg);
  determinism_check(rep, cfg);
  if (cfg.inject_failure) {
    rep.checks.push_back(make_check("injected_failure",
                                    "deliberately failing check requested by the configuration",
                                    1.0, 0.0));
  }
  discrepancies(rep, dq);
  return rep;
}

}  // namespace inerton::cli

#include "inerton/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "inerton/errors.hpp"
#include "inerton/phase.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxAdaptiveSteps = 50'000'000;

bool finite(const OdeState& s) {
  return std::isfinite(s.X) && std::isfinite(s.Xdot) && std::isfinite(s.x) &&
         std::isfinite(s.xdot);
}

OdeState rk4_step(const CoupledSystem& sys, const OdeState& s, double h) {
  const OdeState k1 = derivatives(s, sys);
  const OdeState k2 = derivatives(s + (h / 2.0) * k1, sys);
  const OdeState k3 = derivatives(s + (h / 2.0) * k2, sys);
  const OdeState k4 = derivatives(s + h * k3, sys);
  return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct EmbeddedStep {
  OdeState high;
  OdeState error;
};

// Dormand-Prince 5(4); the system is autonomous so stage times are unused.
EmbeddedStep dp45_step(const CoupledSystem& sys, const OdeState& s, double h) {
  const OdeState k1 = derivatives(s, sys);
  const OdeState k2 = derivatives(s + h * ((1.0 / 5.0) * k1), sys);
  const OdeState k3 = derivatives(s + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2), sys);
  const OdeState k4 = derivatives(
      s + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * k2 + (32.0 / 9.0) * k3), sys);
  const OdeState k5 = derivatives(
      s + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * k2 +
               (64448.0 / 6561.0) * k3 + (-212.0 / 729.0) * k4),
      sys);
  const OdeState k6 = derivatives(
      s + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * k2 +
               (46732.0 / 5247.0) * k3 + (49.0 / 176.0) * k4 +
               (-5103.0 / 18656.0) * k5),
      sys);
  const OdeState high =
      s + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 +
               (-2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
  const OdeState k7 = derivatives(high, sys);
  const OdeState error =
      h * ((35.0 / 384.0 - 5179.0 / 57600.0) * k1 +
           (500.0 / 1113.0 - 7571.0 / 16695.0) * k3 +
           (125.0 / 192.0 - 393.0 / 640.0) * k4 +
           (-2187.0 / 6784.0 + 92097.0 / 339200.0) * k5 +
           (11.0 / 84.0 - 187.0 / 2100.0) * k6 + (-1.0 / 40.0) * k7);
  return {high, error};
}

double error_norm(const OdeState& err, const OdeState& a, const OdeState& b,
                  double rel, double abs) {
  auto comp = [&](double e, double ya, double yb) {
    return std::abs(e) / (abs + rel * std::max(std::abs(ya), std::abs(yb)));
  };
  return std::max({comp(err.X, a.X, b.X), comp(err.Xdot, a.Xdot, b.Xdot),
                   comp(err.x, a.x, b.x), comp(err.xdot, a.xdot, b.xdot)});
}

/// Drives one coupled system over a span. Owns all mutable run state.
class Runner {
 public:
  Runner(const CoupledSystem& sys, const IntegratorConfig& cfg)
      : sys_(sys), cfg_(cfg), adaptive_h_(cfg.step) {}

  IntegrationRun& run() { return run_; }

  void record(double t, const OdeState& s) {
    run_.series.samples.push_back({t, s.X, s.Xdot, s.x, s.xdot});
  }

  OdeState advance(const OdeState& s, double ta, double tb) {
    if (sys_.v0 == 0.0 || tb == ta) return s;
    if (cfg_.method == StepMethod::Rk4) {
      ++run_.accepted_steps;
      return checked(rk4_step(sys_, s, tb - ta), ta, tb);
    }
    return advance_adaptive(s, ta, tb);
  }

  void check_constraints(double t, const OdeState& s, double t_prev) const {
    if (!cfg_.monitor_constraints) return;
    const double tol = cfg_.constraint_tol;
    const double lambda = sys_.v0 * sys_.T;
    const double Lambda = sys_.c * sys_.T;
    const bool ok = s.X >= -tol * lambda && s.Xdot >= -tol * sys_.v0 &&
                    s.x >= -tol * Lambda && std::abs(s.xdot) <= sys_.c * (1.0 + tol);
    if (!ok) {
      throw IntegrationError("state constraint violated at t = " + std::to_string(t),
                             t_prev);
    }
  }

  OdeState apply_event(double t, const OdeState& before) {
    ReflectionEvent ev;
    ev.t = t;
    ev.before = before;
    ev.velocity_gap = std::abs(before.Xdot - sys_.v0);
    ev.distance_gap = std::abs(before.x);
    run_.events.push_back(ev);
    if (ev.velocity_gap > cfg_.event_tol * sys_.v0 ||
        ev.distance_gap > cfg_.event_tol * sys_.c * sys_.T) {
      throw IntegrationError(
          "reflection at t = " + std::to_string(t) +
              ": state is not within event tolerance of X' = v0, x = 0",
          t);
    }
    return reflect(before);
  }

 private:
  OdeState checked(const OdeState& s, double ta, double tb) const {
    if (!finite(s)) {
      throw IntegrationError("non-finite state at t = " + std::to_string(tb), ta);
    }
    return s;
  }

  OdeState advance_adaptive(OdeState s, double ta, double tb) {
    double t = ta;
    double h = std::min(adaptive_h_, tb - ta);
    const double h_min = 1e-14 * std::max(sys_.T, std::abs(tb));
    std::size_t steps = 0;
    while (t < tb) {
      const bool last = t + h >= tb;
      const double h_try = last ? tb - t : h;
      const EmbeddedStep step = dp45_step(sys_, s, h_try);
      const double err = finite(step.high)
                             ? error_norm(step.error, s, step.high, cfg_.rel_tol,
                                          cfg_.abs_tol)
                             : std::numeric_limits<double>::infinity();
      double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      factor = std::clamp(factor, 0.2, 5.0);
      if (err <= 1.0) {
        t = last ? tb : t + h_try;
        s = step.high;
        ++run_.accepted_steps;
        if (!last) h = h_try * factor;
        else adaptive_h_ = std::max(h, h_try);
      } else {
        ++run_.rejected_steps;
        h = h_try * factor;
        if (!std::isfinite(h) || h < h_min) {
          throw IntegrationError("adaptive step size collapsed below minimum", t);
        }
      }
      if (++steps > kMaxAdaptiveSteps) {
        throw IntegrationError("adaptive step budget exhausted", t);
      }
    }
    return s;
  }

  CoupledSystem sys_;
  IntegratorConfig cfg_;
  double adaptive_h_;
  IntegrationRun run_;
};

void validate(const IntegratorConfig& cfg) {
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
    throw PreconditionError("integrator step must be > 0");
  }
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || !(cfg.event_tol > 0.0) ||
      !(cfg.constraint_tol > 0.0)) {
    throw PreconditionError("integrator tolerances must be > 0");
  }
  if (cfg.output_stride < 1) {
    throw PreconditionError("output stride must be >= 1");
  }
}

std::size_t substeps(double span, double step) {
  const double n = std::ceil(span / step * (1.0 - 1e-12));
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

// Integrates [a, b] in equal substeps, recording on the stride. The state at
// b is returned without being recorded.
OdeState run_piece(Runner& runner, OdeState s, double a, double b,
                   const IntegratorConfig& cfg) {
  const std::size_t n = substeps(b - a, cfg.step);
  const auto stride = static_cast<std::size_t>(cfg.output_stride);
  double t_prev = a;
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = i == n ? b : a + static_cast<double>(i) * (b - a) / static_cast<double>(n);
    s = runner.advance(s, t_prev, t);
    runner.check_constraints(t, s, t_prev);
    if (i < n && i % stride == 0) runner.record(t, s);
    t_prev = t;
  }
  return s;
}

IntegrationRun run_scheduled(const CoupledSystem& sys, const OdeState& s0,
                             double t0, double t_end, const IntegratorConfig& cfg,
                             bool reflect_events) {
  Runner runner(sys, cfg);
  runner.record(t0, s0);
  if (t_end == t0) return std::move(runner.run());

  std::vector<double> bounds{t0};
  const PeriodPhase end_phase = period_phase(t_end, sys.T);
  const bool event_at_end = reflect_events && end_phase.on_boundary();
  if (reflect_events) {
    for (std::int64_t n = period_phase(t0, sys.T).index + 1;; ++n) {
      if (end_phase.on_boundary() && n >= end_phase.index) break;
      const double tn = static_cast<double>(n) * sys.T;
      if (tn >= t_end) break;
      bounds.push_back(tn);
    }
  }
  bounds.push_back(t_end);

  OdeState s = s0;
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double a = bounds[p];
    const double b = bounds[p + 1];
    s = run_piece(runner, s, a, b, cfg);
    const bool interior_event = p + 2 < bounds.size();
    if ((interior_event || event_at_end) && sys.v0 != 0.0) {
      s = runner.apply_event(b, s);
    }
    runner.record(b, s);
  }
  return std::move(runner.run());
}

IntegrationRun run_detected(const CoupledSystem& sys, const OdeState& s0,
                            double t0, double t_end, const IntegratorConfig& cfg) {
  Runner runner(sys, cfg);
  runner.record(t0, s0);
  if (t_end == t0) return std::move(runner.run());

  const std::size_t n = substeps(t_end - t0, cfg.step);
  const auto stride = static_cast<std::size_t>(cfg.output_stride);
  OdeState s = s0;
  double ta = t0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double tb =
        i == n ? t_end : t0 + static_cast<double>(i) * (t_end - t0) / static_cast<double>(n);
    if (sys.v0 != 0.0 && s.x <= 0.0 && s.xdot < 0.0) {
      s = runner.apply_event(ta, s);
    }
    OdeState trial = runner.advance(s, ta, tb);
    if (sys.v0 != 0.0 && trial.x < 0.0 && s.x >= 0.0) {
      // Bracket the zero of x on [ta, tb] using re-integration from ta.
      double lo = ta;
      double hi = tb;
      OdeState at_lo = s;
      const double resolution = 4.0 * std::numeric_limits<double>::epsilon() *
                                std::max(std::abs(tb), sys.T);
      while (hi - lo > resolution) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        const OdeState probe = runner.advance(s, ta, mid);
        if (probe.x >= 0.0) {
          lo = mid;
          at_lo = probe;
        } else {
          hi = mid;
        }
      }
      const OdeState after = runner.apply_event(lo, at_lo);
      trial = runner.advance(after, lo, tb);
    }
    // A crossing that falls within event tolerance past a step end belongs to it.
    if (sys.v0 != 0.0 && trial.xdot < 0.0 &&
        trial.x >= 0.0 && trial.x <= -trial.xdot * cfg.event_tol * sys.T) {
      trial = runner.apply_event(tb, trial);
    }
    s = trial;
    runner.check_constraints(tb, s, ta);
    if (i == n || i % stride == 0) runner.record(tb, s);
    ta = tb;
  }
  return std::move(runner.run());
}

}  // namespace

OdeState derivatives(const OdeState& s, const CoupledSystem& sys) {
  if (sys.v0 == 0.0) {
    throw DegenerateSystemError(
        "coupled equations are singular at v0 = 0; use the rest-state shortcut");
  }
  const double w = kPi / sys.T;
  return {s.Xdot, -w * (sys.v0 / sys.c) * s.xdot, s.xdot,
          w * (sys.c / sys.v0) * (s.Xdot - sys.v0)};
}

OdeState derivatives(const OdeState& s, const DerivedQuantities& dq) {
  return derivatives(s, CoupledSystem{dq.v0, dq.T, dq.c});
}

OdeState reflect(const OdeState& s) { return {s.X, s.Xdot, s.x, -s.xdot}; }

OdeState canonical_start(const DerivedQuantities& dq) { return {0.0, dq.v0, 0.0, dq.c}; }

IntegrationRun integrate(const OdeState& s0, double t0, double t_end,
                         const DerivedQuantities& dq, const IntegratorConfig& cfg) {
  validate(cfg);
  if (!(t0 >= 0.0) || !(t_end >= t0) || !std::isfinite(t_end)) {
    throw PreconditionError("integration span must satisfy 0 <= t0 <= t_end");
  }
  if (t_end > 1000.0 * dq.T * (1.0 + 1e-12)) {
    throw PreconditionError("integration span is limited to [0, 1000 T]");
  }
  if (!finite(s0)) {
    throw PreconditionError("initial state must be finite");
  }
  const CoupledSystem sys{dq.v0, dq.T, dq.c};
  IntegrationRun run = cfg.event_mode == EventMode::Scheduled || dq.v0 == 0.0
                           ? run_scheduled(sys, s0, t0, t_end, cfg, true)
                           : run_detected(sys, s0, t0, t_end, cfg);
  const double step = run.series.samples.size() > 1
                          ? run.series.samples[1].t - run.series.samples[0].t
                          : 0.0;
  run.series.grid = {t0, t_end, step};
  return run;
}

IntegrationRun integrate_inerton(std::size_t r, const EnsembleVelocities& ens,
                                 const IntegratorConfig& cfg) {
  validate(cfg);
  if (r >= ens.size()) {
    throw PreconditionError("inerton index out of range");
  }
  const CoupledSystem sys{ens.v0r[r], ens.T_r[r], ens.c};
  if (sys.v0 == 0.0) {
    throw DegenerateSystemError("inerton emission speed is zero; equations are singular");
  }
  const OdeState s0{0.0, sys.v0, 0.0, sys.c};
  IntegrationRun run = run_scheduled(sys, s0, 0.0, sys.T, cfg, false);
  const double step = run.series.samples.size() > 1 ? run.series.samples[1].t : 0.0;
  run.series.grid = {0.0, sys.T, step};
  return run;
}

ResidualPair analytic_residual(double t, const DerivedQuantities& dq, double cusp_tol,
                               CloudSign sign) {
  if (!(t >= 0.0)) {
    throw PreconditionError("time must be >= 0");
  }
  if (dq.v0 == 0.0) {
    throw DegenerateSystemError("coupled equations are singular at v0 = 0");
  }
  const double q = t / dq.T;
  const double frac = q - std::floor(q);
  if (frac <= cusp_tol || 1.0 - frac <= cusp_tol || std::abs(frac - 0.5) <= cusp_tol) {
    throw PreconditionError("residual requested at a cusp point nT or (n+1/2)T");
  }

  const double w = kPi / dq.T;
  double Xddot = 0.0;
  double xdot = 0.0;
  double xddot = 0.0;
  double Xdot = 0.0;
  if (sign == CloudSign::Alternating) {
    Xddot = -dq.v0 * w * cos_pi(frac);
    xdot = dq.c * cos_pi(frac);
    xddot = -dq.c * w * sin_pi(frac);
    Xdot = dq.v0 * (1.0 - sin_pi(frac));
  } else {
    const double parity = (static_cast<std::int64_t>(std::floor(q)) % 2 == 0) ? 1.0 : -1.0;
    Xddot = -dq.v0 * w * parity * cos_pi(q);
    xdot = dq.c * cos_pi(q);
    xddot = -dq.c * w * sin_pi(q);
    Xdot = dq.v0 * (1.0 - std::abs(sin_pi(q)));
  }
  return {Xddot + w * (dq.v0 / dq.c) * xdot,
          xddot - w * (dq.c / dq.v0) * (Xdot - dq.v0)};
}

}  // namespace inerton

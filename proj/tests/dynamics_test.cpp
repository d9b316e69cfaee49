#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "inerton/dynamics.hpp"
#include "inerton/errors.hpp"
#include "support/oracles.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;

DerivedQuantities canonical() { return derive_quantities(ModelParams{}); }

struct StateError {
  double X = 0.0, Xdot = 0.0, x = 0.0, xdot = 0.0;
  double max() const { return std::max({X, Xdot, x, xdot}); }
};

// Independent oracle written from the closed forms, not the library.
SystemState oracle(double t, double v0, double c, double T) {
  const double q = t / T;
  double k = std::floor(q);
  if (std::abs(q - std::round(q)) < 1e-12) k = std::round(q);
  const double s = std::sin(kPi * t / T);
  const double co = std::cos(kPi * t / T);
  const double sign = static_cast<long long>(k) % 2 == 0 ? 1.0 : -1.0;
  const double lambda = v0 * T;
  const double Lambda = c * T;
  return {t, v0 * t + (lambda / kPi) * (sign * co - 1.0 - 2.0 * k), v0 * (1.0 - std::abs(s)),
          (Lambda / kPi) * std::abs(s), c * sign * co};
}

StateError sweep(const IntegrationRun& run, const DerivedQuantities& dq) {
  StateError e;
  for (const SystemState& s : run.series.samples) {
    const SystemState a = oracle(s.t, dq.v0, dq.c, dq.T);
    e.X = std::max(e.X, std::abs(s.X - a.X));
    e.Xdot = std::max(e.Xdot, std::abs(s.Xdot - a.Xdot));
    e.x = std::max(e.x, std::abs(s.x - a.x));
    e.xdot = std::max(e.xdot, std::abs(s.xdot - a.xdot));
  }
  return e;
}

IntegratorConfig rk4(double step) {
  IntegratorConfig cfg;
  cfg.step = step;
  return cfg;
}

TEST(Derivatives, CanonicalStart) {
  const DerivedQuantities dq = canonical();
  const OdeState d = derivatives(canonical_start(dq), dq);
  EXPECT_EQ(d.X, 0.6);
  EXPECT_NEAR(d.Xdot, -kPi * 0.6, 1e-15);
  EXPECT_EQ(d.x, 1.0);
  EXPECT_EQ(d.xdot, 0.0);
}

TEST(Derivatives, VelocityEquilibrium) {
  const DerivedQuantities dq = canonical();
  const OdeState d = derivatives(OdeState{3.0, 0.6, 0.2, 0.0}, dq);
  EXPECT_EQ(d, (OdeState{0.6, 0.0, 0.0, 0.0}));
}

TEST(Derivatives, IndependentOfPositions) {
  const DerivedQuantities dq = canonical();
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const double Xd = rng.uniform(0.0, 0.6);
    const double xd = rng.uniform(-1.0, 1.0);
    const OdeState a = derivatives(OdeState{rng.uniform(0, 10), Xd, rng.uniform(0, 1), xd}, dq);
    const OdeState b = derivatives(OdeState{rng.uniform(0, 10), Xd, rng.uniform(0, 1), xd}, dq);
    EXPECT_EQ(a, b);
  }
}

TEST(Derivatives, RestIsDegenerate) {
  ModelParams p;
  p.v0 = 0.0;
  const DerivedQuantities dq = derive_quantities(p);
  EXPECT_THROW(derivatives(OdeState{}, dq), DegenerateSystemError);
  EXPECT_THROW(derivatives(OdeState{}, CoupledSystem{0.0, 1.0, 1.0}), DegenerateSystemError);
}

TEST(Reflect, IsAnInvolution) {
  testing::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const OdeState s{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                     rng.uniform(-5, 5)};
    EXPECT_EQ(reflect(reflect(s)), s);
    const OdeState r = reflect(s);
    EXPECT_EQ(r.X, s.X);
    EXPECT_EQ(r.Xdot, s.Xdot);
    EXPECT_EQ(r.x, s.x);
    EXPECT_EQ(r.xdot, -s.xdot);
  }
}

TEST(Integrate, OnePeriodExamples) {
  const DerivedQuantities dq = canonical();
  IntegratorConfig cfg = rk4(1e-3);
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 1.0, dq, cfg);
  ASSERT_EQ(run.series.samples.size(), 1001u);
  const SystemState& end = run.series.samples.back();
  EXPECT_EQ(end.t, 1.0);
  EXPECT_NEAR(end.X, 0.21802813657945119415, 1e-8);
  const SystemState& half = run.series.samples[500];
  EXPECT_EQ(half.t, 0.5);
  EXPECT_NEAR(half.Xdot, 0.0, 1e-8);
  EXPECT_NEAR(half.x, 1.0 / kPi, 1e-8);
  ASSERT_EQ(run.events.size(), 1u);
  EXPECT_EQ(run.events[0].t, 1.0);
  EXPECT_NEAR(end.xdot, 1.0, 1e-8);
  EXPECT_NEAR(run.events[0].before.xdot, -1.0, 1e-8);
}

TEST(Integrate, TenPeriodsMatchClosedForms) {
  const DerivedQuantities dq = canonical();
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0, dq, rk4(1e-3));
  EXPECT_EQ(run.series.samples.size(), 10001u);
  EXPECT_EQ(run.events.size(), 10u);
  const StateError e = sweep(run, dq);
  EXPECT_LE(e.X, 1e-7);
  EXPECT_LE(e.Xdot, 1e-7);
  EXPECT_LE(e.x, 1e-7);
  EXPECT_LE(e.xdot, 1e-7);
  for (const ReflectionEvent& ev : run.events) {
    EXPECT_LE(ev.velocity_gap, 1e-9);
    EXPECT_LE(ev.distance_gap, 1e-9);
  }
}

TEST(Integrate, FourthOrderConvergence) {
  const DerivedQuantities dq = canonical();
  const StateError coarse = sweep(integrate(canonical_start(dq), 0.0, 10.0, dq, rk4(2e-3)), dq);
  const StateError fine = sweep(integrate(canonical_start(dq), 0.0, 10.0, dq, rk4(1e-3)), dq);
  const double ratio = coarse.max() / fine.max();
  EXPECT_NEAR(ratio, 16.0, 4.0) << coarse.max() << " / " << fine.max();
}

TEST(Integrate, VelocitiesStayOnUnitCircle) {
  const DerivedQuantities dq = canonical();
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0, dq, rk4(1e-3));
  for (const SystemState& s : run.series.samples) {
    const double u = (s.Xdot - dq.v0) / dq.v0;
    const double w = s.xdot / dq.c;
    EXPECT_NEAR(u * u + w * w, 1.0, 1e-9) << "t = " << s.t;
  }
}

TEST(Integrate, DetectedEventsMatchScheduled) {
  const DerivedQuantities dq = canonical();
  IntegratorConfig detected = rk4(1e-3);
  detected.event_mode = EventMode::Detected;
  const IntegrationRun a = integrate(canonical_start(dq), 0.0, 10.0, dq, rk4(1e-3));
  const IntegrationRun b = integrate(canonical_start(dq), 0.0, 10.0, dq, detected);
  ASSERT_EQ(a.events.size(), b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    EXPECT_LE(std::abs(a.events[i].t - b.events[i].t), 1e-9 * dq.T);
  }
  EXPECT_LE(sweep(b, dq).max(), 1e-7);
}

TEST(Integrate, AdaptivePairMatchesClosedForms) {
  const DerivedQuantities dq = canonical();
  IntegratorConfig cfg;
  cfg.method = StepMethod::DormandPrince45;
  cfg.step = 0.01;
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0, dq, cfg);
  EXPECT_EQ(run.series.samples.size(), 1001u);
  EXPECT_LE(sweep(run, dq).max(), 1e-7);
  EXPECT_GT(run.accepted_steps, 0u);
}

TEST(Integrate, OutputStrideThinsSamples) {
  const DerivedQuantities dq = canonical();
  IntegratorConfig cfg = rk4(1e-3);
  cfg.output_stride = 10;
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 2.0, dq, cfg);
  ASSERT_EQ(run.series.samples.size(), 201u);
  EXPECT_EQ(run.series.samples.back().t, 2.0);
}

TEST(Integrate, NonCanonicalPeriod) {
  ModelParams p;
  p.T = 0.37;
  p.v0 = 0.25;
  const DerivedQuantities dq = derive_quantities(p);
  const IntegrationRun run = integrate(canonical_start(dq), 0.0, 10 * p.T, dq, rk4(p.T / 1000));
  EXPECT_EQ(run.events.size(), 10u);
  EXPECT_LE(sweep(run, dq).max(), 1e-7);
}

TEST(Integrate, RestCaseBypassesIntegration) {
  ModelParams p;
  p.v0 = 0.0;
  const DerivedQuantities dq = derive_quantities(p);
  const OdeState s0{0.5, 0.0, 0.0, 0.0};
  const IntegrationRun run = integrate(s0, 0.0, 2.0, dq, rk4(0.1));
  ASSERT_FALSE(run.series.samples.empty());
  for (const SystemState& s : run.series.samples) {
    EXPECT_EQ(s.X, 0.5);
    EXPECT_EQ(s.Xdot, 0.0);
  }
}

TEST(Integrate, RejectsBadInputs) {
  const DerivedQuantities dq = canonical();
  const OdeState s0 = canonical_start(dq);
  EXPECT_THROW(integrate(s0, 0.0, 1.0, dq, rk4(0.0)), PreconditionError);
  EXPECT_THROW(integrate(s0, 1.0, 0.5, dq, rk4(1e-3)), PreconditionError);
  EXPECT_THROW(integrate(s0, -1.0, 0.5, dq, rk4(1e-3)), PreconditionError);
  EXPECT_THROW(integrate(s0, 0.0, 1001.0, dq, rk4(1e-3)), PreconditionError);
  IntegratorConfig bad = rk4(1e-3);
  bad.rel_tol = 0.0;
  EXPECT_THROW(integrate(s0, 0.0, 1.0, dq, bad), PreconditionError);
}

TEST(Integrate, OffConstraintStartFailsAtFirstEvent) {
  const DerivedQuantities dq = canonical();
  OdeState s0 = canonical_start(dq);
  s0.Xdot = 0.5;
  IntegratorConfig cfg = rk4(1e-3);
  cfg.monitor_constraints = false;
  try {
    integrate(s0, 0.0, 3.0, dq, cfg);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_LE(e.last_good_time(), 1.0);
  }
}

TEST(IntegrateInerton, ZerothReducesToParticle) {
  const ModelParams p;
  const DerivedQuantities dq = derive_quantities(p);
  const EnsembleVelocities ens = ensemble_velocities(p);
  const IntegrationRun a = integrate_inerton(0, ens, rk4(1e-3));
  const IntegrationRun b = integrate(canonical_start(dq), 0.0, 1.0, dq, rk4(1e-3));
  ASSERT_EQ(a.series.samples.size(), b.series.samples.size());
  for (std::size_t i = 0; i + 1 < a.series.samples.size(); ++i) {
    EXPECT_EQ(a.series.samples[i].X, b.series.samples[i].X);
    EXPECT_EQ(a.series.samples[i].xdot, b.series.samples[i].xdot);
  }
  EXPECT_TRUE(a.events.empty());
}

TEST(IntegrateInerton, HalfPeriodStop) {
  ModelParams p;
  p.N = 2;
  const EnsembleVelocities ens = ensemble_velocities(p);
  const IntegrationRun run = integrate_inerton(1, ens, rk4(1e-3));
  const SystemState& half = run.series.samples[500];
  EXPECT_EQ(half.t, 0.5);
  EXPECT_NEAR(half.Xdot, 0.0, 1e-8);
}

TEST(IntegrateInerton, MatchesSinglePeriodSolution) {
  const ModelParams p;
  const EnsembleVelocities ens = ensemble_velocities(p);
  for (std::size_t r = 0; r < 4; ++r) {
    const IntegrationRun run = integrate_inerton(r, ens, rk4(ens.T_r[r] / 1000));
    double worst = 0.0;
    for (const SystemState& s : run.series.samples) {
      const InertonPeriodState a = inerton_period_solution(r, std::min(s.t, ens.T_r[r]), ens);
      worst = std::max({worst, std::abs(s.X - a.X), std::abs(s.Xdot - a.Xdot),
                        std::abs(s.x - a.x_perp), std::abs(s.xdot - a.xdot_perp)});
    }
    EXPECT_LE(worst, 1e-7) << "r = " << r;
  }
}

TEST(IntegrateInerton, VanishingSpeedIsDegenerate) {
  ModelParams p;
  const EnsembleVelocities ens = ensemble_velocities(p, {{1.0, 1.0, 1.0, 1.0}});
  EnsembleVelocities zeroed = ens;
  zeroed.v0r[2] = 0.0;
  EXPECT_THROW(integrate_inerton(2, zeroed, rk4(1e-3)), DegenerateSystemError);
  EXPECT_THROW(integrate_inerton(7, ens, rk4(1e-3)), PreconditionError);
}

TEST(AnalyticResidual, VanishesInPeriodInteriors) {
  const DerivedQuantities dq = canonical();
  for (double t : {0.25, 1.75}) {
    const ResidualPair r = analytic_residual(t, dq);
    EXPECT_LE(std::abs(r.r1), 1e-13) << t;
    EXPECT_LE(std::abs(r.r2), 1e-13) << t;
  }
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 4.0 * (i + 0.5) / 1000.0;
    const double frac = 2.0 * t - std::floor(2.0 * t);
    if (frac < 1e-6 || frac > 1.0 - 1e-6) continue;
    const ResidualPair r = analytic_residual(t, dq);
    worst = std::max({worst, std::abs(r.r1), std::abs(r.r2)});
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(AnalyticResidual, UnflippedSignIsDetected) {
  const DerivedQuantities dq = canonical();
  const ResidualPair r = analytic_residual(1.25, dq, 1e-9, CloudSign::Unflipped);
  EXPECT_NEAR(r.r1, -2.6657297628950197482, 1e-12);
  EXPECT_NEAR(r.r2, 4.4428829381583662470, 1e-12);
  const ResidualPair first = analytic_residual(0.25, dq, 1e-9, CloudSign::Unflipped);
  EXPECT_LE(std::abs(first.r1), 1e-13);
}

TEST(AnalyticResidual, RejectsCusps) {
  const DerivedQuantities dq = canonical();
  EXPECT_THROW(analytic_residual(1.0, dq), PreconditionError);
  EXPECT_THROW(analytic_residual(0.5, dq), PreconditionError);
  EXPECT_THROW(analytic_residual(2.5 + 1e-12, dq), PreconditionError);
  EXPECT_NO_THROW(analytic_residual(2.5 + 1e-6, dq));
}

}  // namespace
}  // namespace inerton

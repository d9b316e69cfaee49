#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "inerton/errors.hpp"
#include "inerton/mechanics.hpp"
#include "support/oracles.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;

DerivedQuantities canonical() { return derive_quantities(ModelParams{}); }

std::vector<double> grid(int n, double t_end) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(t_end * i / (n - 1));
  return g;
}

TEST(ClassicalLagrangian, Examples) {
  EXPECT_EQ(classical_lagrangian(1.0, 0.0, 1.0), -1.0);
  EXPECT_NEAR(classical_lagrangian(1.0, 0.6, 1.0), -0.8, 1e-15);
  EXPECT_NEAR(classical_lagrangian(2.0, 0.8, 1.0), -1.2, 1e-15);
  EXPECT_THROW(classical_lagrangian(1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(classical_lagrangian(1.0, 1.5, 1.0), DomainError);
}

TEST(Lagrangian17, CanonicalStart) {
  const DerivedQuantities dq = canonical();
  const CloudLagrangian l = lagrangian_17(analytic_state(0.0, dq), dq);
  EXPECT_NEAR(l.radical, 0.28, 1e-15);
  EXPECT_NEAR(l.value, -0.52915026221291811810, 1e-15);
  EXPECT_TRUE(l.evaluable());
}

TEST(Lagrangian17, HalfPeriodRadicalDiffers) {
  const DerivedQuantities dq = canonical();
  const CloudLagrangian l = lagrangian_17(analytic_state(0.5, dq), dq);
  EXPECT_NEAR(l.radical, 1.72, 1e-14);
}

TEST(Lagrangian17, RestCase) {
  ModelParams p;
  p.v0 = 0.0;
  const DerivedQuantities dq = derive_quantities(p);
  const CloudLagrangian l = lagrangian_17(SystemState{}, dq);
  EXPECT_EQ(l.radical, 1.0);
  EXPECT_EQ(l.value, -1.0);
}

TEST(Lagrangian17, ReducesToClassicalWithoutCloudTerms) {
  testing::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    ModelParams p;
    p.v0 = rng.uniform(0.0, 0.99);
    p.M0 = rng.uniform(0.1, 5.0);
    const DerivedQuantities dq = derive_quantities(p);
    const SystemState s{0.0, 0.0, dq.v0, 0.0, 0.0};
    const CloudLagrangian l = lagrangian_17(s, dq);
    EXPECT_NEAR(l.radical, 1.0 - p.v0 * p.v0, 1e-14);
    EXPECT_NEAR(l.value, classical_lagrangian(p.M0, p.v0, 1.0), 1e-13 * p.M0);
  }
}

TEST(Lagrangian17, NegativeRadicalIsFlaggedNotThrown) {
  ModelParams p;
  p.v0 = 0.9;
  const DerivedQuantities dq = derive_quantities(p);
  const CloudLagrangian l = lagrangian_17(analytic_state(0.0, dq), dq);
  EXPECT_LT(l.radical, 0.0);
  EXPECT_FALSE(l.evaluable());
  EXPECT_TRUE(std::isnan(l.value));
}

TEST(CanonicalTransform, Examples) {
  const DerivedQuantities dq = canonical();
  EXPECT_EQ(canonical_transform(SystemState{0.0, 0.0, 0.6, 0.0, 0.73}, dq), 0.73);
  EXPECT_EQ(canonical_transform(analytic_state(0.0, dq), dq), 1.0);
  const SystemState mid{0.5, particle_position(0.5, dq), 0.0, 0.0, 0.0};
  EXPECT_NEAR(canonical_transform(mid, dq), -0.57079632679489661923, 1e-14);
  ModelParams p;
  p.v0 = 0.0;
  EXPECT_THROW(canonical_transform(SystemState{}, derive_quantities(p)), PreconditionError);
}

TEST(Momenta, Examples) {
  const DerivedQuantities dq = canonical();
  const Momenta m = momenta(analytic_state(0.0, dq), dq);
  EXPECT_NEAR(m.p, 0.75, 1e-15);
  EXPECT_NEAR(m.p_tilde, 0.45, 1e-15);
  EXPECT_EQ(momenta(SystemState{0.2, 0.1, 0.0, 0.1, 0.3}, dq).p, 0.0);
}

TEST(Momenta, LinearInVelocities) {
  const DerivedQuantities dq = canonical();
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const double k = rng.uniform(0.0, 4.0);
    const SystemState a{0.0, 0.0, rng.uniform(0.0, 0.6), 0.1, rng.uniform(-1.0, 1.0)};
    SystemState b = a;
    b.Xdot *= 2.0;
    b.xdot *= k;
    EXPECT_EQ(momenta(b, dq).p, 2.0 * momenta(a, dq).p);
    EXPECT_NEAR(momenta(b, dq).p_tilde, k * momenta(a, dq).p_tilde, 1e-15);
  }
}

TEST(Hamiltonians, CanonicalStart) {
  const DerivedQuantities dq = canonical();
  const Hamiltonians h = hamiltonians(analytic_state(0.0, dq), dq);
  EXPECT_NEAR(h.H24, 1.25, 1e-15);
  EXPECT_NEAR(h.H27, 0.45 + 0.45 * 0.45 / 0.45 + 0.8, 1e-14);
  EXPECT_NEAR(h.Heff, 0.225, 1e-15);
  EXPECT_NEAR(h.H28, 0.225 + (1.25 * 1.25 + 1.0) / 2.5 + 0.225, 1e-14);
}

TEST(Hamiltonians, RestCase) {
  ModelParams p;
  p.v0 = 0.0;
  const DerivedQuantities dq = derive_quantities(p);
  const Hamiltonians h = hamiltonians(SystemState{}, dq);
  EXPECT_EQ(h.H24, 1.0);
  EXPECT_EQ(h.H27, 1.0);
  EXPECT_EQ(h.Heff, 0.0);
}

TEST(Hamiltonians, H27BoundedBelowAndPure) {
  const DerivedQuantities dq = canonical();
  testing::Rng rng(27);
  const double floor_value = (dq.M0 * dq.c) * (dq.M0 * dq.c) / dq.M;
  for (int i = 0; i < 1000; ++i) {
    const SystemState s{0.0, rng.uniform(-3, 3), rng.uniform(-1, 1), rng.uniform(-1, 1),
                        rng.uniform(-1, 1)};
    const Hamiltonians a = hamiltonians(s, dq);
    const Hamiltonians b = hamiltonians(s, dq);
    EXPECT_GE(a.H27, floor_value);
    EXPECT_EQ(a.H24, b.H24);
    EXPECT_EQ(a.H27, b.H27);
    EXPECT_EQ(a.H28, b.H28);
    EXPECT_EQ(a.Heff, b.Heff);
  }
}

TEST(HeffConservation, AlongOscillator) {
  EXPECT_EQ(heff_conservation(0.0, 1.25, 1.0, grid(100, 2.0)), 0.0);
  const double E = 0.225;
  EXPECT_LE(heff_conservation(E, 1.25, 1.0, grid(1000, 2.0)), 1e-10 * E);
  testing::Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    const double e = rng.uniform(0.01, 10.0);
    const double M = rng.uniform(0.1, 10.0);
    const double T = rng.uniform(0.1, 10.0);
    EXPECT_LE(heff_conservation(e, M, T, grid(1000, 2.0 * T)), 1e-10 * e);
  }
}

TEST(HeffConservation, PerturbedAmplitudeIsDetected) {
  const double E = 0.225;
  const double dev = heff_conservation(E, 1.25, 1.0, grid(1000, 2.0), 1.01);
  EXPECT_NEAR(dev / E, 0.0201, 1e-12);
}

TEST(HeffConservation, RejectsNegativeEnergy) {
  EXPECT_THROW(heff_conservation(-1.0, 1.0, 1.0, grid(10, 1.0)), PreconditionError);
}

TEST(EvaluateMechanics, BundlesAllValues) {
  const DerivedQuantities dq = canonical();
  const SystemState s = analytic_state(0.3, dq);
  const MechanicsSample m = evaluate_mechanics(s, dq);
  EXPECT_EQ(m.L17, lagrangian_17(s, dq).value);
  EXPECT_EQ(m.radical, lagrangian_17(s, dq).radical);
  EXPECT_EQ(m.L22, lagrangian_22(s, dq).value);
  EXPECT_EQ(m.H.H24, hamiltonians(s, dq).H24);
  EXPECT_NEAR(m.L2, -0.8, 1e-15);
  EXPECT_EQ(m.x_tilde_dot, canonical_transform(s, dq));
}

TEST(Annotate, RadicalProfileAlongTrajectory) {
  const DerivedQuantities dq = canonical();
  TrajectorySeries series = sample_trajectory(uniform_grid(0.0, 2.0, 100, dq.T), dq);
  annotate(series, dq);
  ASSERT_TRUE(series.has_diagnostics());
  EXPECT_NEAR(series.diagnostics[0].radical, 1.0 - 2.0 * 0.36, 1e-15);
  EXPECT_NEAR(series.diagnostics[50].radical, 1.0 + 2.0 * 0.36, 1e-14);
  EXPECT_NEAR(series.diagnostics[0].heff, 0.225, 1e-15);
}

}  // namespace
}  // namespace inerton

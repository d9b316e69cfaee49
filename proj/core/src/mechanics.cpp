#include "inerton/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "inerton/errors.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CloudLagrangian finish(double bracket, const DerivedQuantities& dq) {
  const double rest = dq.M0 * dq.c * dq.c;
  CloudLagrangian l;
  l.radical = 1.0 - bracket / rest;
  l.value = l.radical >= 0.0 ? -rest * std::sqrt(l.radical) : kNaN;
  return l;
}

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

double classical_lagrangian(double M0, double v0, double c) {
  (void)lorentz_factor(v0, c);  // validates 0 <= v0 < c
  const double beta = v0 / c;
  return -M0 * c * c * std::sqrt((1.0 - beta) * (1.0 + beta));
}

CloudLagrangian lagrangian_17(const SystemState& s, const DerivedQuantities& dq) {
  const double coupling = (2.0 * kPi / dq.T) * std::sqrt(dq.m0 * dq.M0);
  const double bracket = dq.M0 * s.Xdot * s.Xdot + dq.m0 * s.xdot * s.xdot -
                         coupling * (s.X * s.xdot + dq.v0 * s.x);
  return finish(bracket, dq);
}

CloudLagrangian lagrangian_22(const SystemState& s, const DerivedQuantities& dq) {
  if (dq.m0 == 0.0) return {kNaN, kNaN};
  const double w = kPi / dq.T;
  const double xt = canonical_transform(s, dq);
  const double coupling = (2.0 * kPi / dq.T) * std::sqrt(dq.m0 * dq.M0);
  const double bracket = dq.M0 * s.Xdot * s.Xdot - dq.M0 * w * w * s.X * s.X +
                         dq.m0 * xt * xt - coupling * dq.v0 * s.x;
  return finish(bracket, dq);
}

double canonical_transform(const SystemState& s, const DerivedQuantities& dq) {
  if (dq.m0 == 0.0) {
    throw PreconditionError("canonical transform needs a cloud with m0 > 0");
  }
  return s.xdot - (kPi / dq.T) * std::sqrt(dq.M0 / dq.m0) * s.X;
}

Momenta momenta(const SystemState& s, const DerivedQuantities& dq) {
  Momenta mo;
  mo.p = dq.M * s.Xdot;
  mo.p_tilde = dq.m0 == 0.0 ? 0.0 : dq.m * canonical_transform(s, dq);
  return mo;
}

Hamiltonians hamiltonians(const SystemState& s, const DerivedQuantities& dq) {
  const Momenta mo = momenta(s, dq);
  const double w = kPi / dq.T;
  const double M = dq.M;
  const double m = dq.m;
  const double Mc = M * dq.c;
  const double M0c = dq.M0 * dq.c;
  const double cloud_potential = kPi * std::sqrt(m * dq.M0) * dq.v0 * s.x / dq.T;
  const double oscillator_potential = M * w * w * s.X * s.X;

  Hamiltonians h;
  h.H24 = oscillator_potential + M * dq.c * dq.c + cloud_potential;
  h.H27 = mo.p * mo.p / M + safe_ratio(mo.p_tilde * mo.p_tilde, m) + M0c * M0c / M;
  h.H28 = mo.p * mo.p / (2.0 * M) + oscillator_potential / 2.0 +
          (Mc * Mc + M0c * M0c) / (2.0 * M) +
          safe_ratio(mo.p_tilde * mo.p_tilde, 2.0 * m) + cloud_potential;
  h.Heff = mo.p * mo.p / (2.0 * M) + oscillator_potential / 2.0;
  return h;
}

MechanicsSample evaluate_mechanics(const SystemState& s, const DerivedQuantities& dq) {
  MechanicsSample out;
  out.L2 = classical_lagrangian(dq.M0, dq.v0, dq.c);
  const CloudLagrangian l17 = lagrangian_17(s, dq);
  out.L17 = l17.value;
  out.radical = l17.radical;
  out.L22 = lagrangian_22(s, dq).value;
  const Momenta mo = momenta(s, dq);
  out.p = mo.p;
  out.p_tilde = mo.p_tilde;
  out.x_tilde_dot = dq.m0 == 0.0 ? kNaN : canonical_transform(s, dq);
  out.H = hamiltonians(s, dq);
  return out;
}

double heff_conservation(double E, double M, double T, std::span<const double> grid,
                         double amplitude_scale) {
  const double w = kPi / T;
  double worst = 0.0;
  for (double t : grid) {
    const double X = amplitude_scale * oscillator_position(t, E, M, T);
    const double p = M * amplitude_scale * oscillator_velocity(t, E, M, T);
    const double heff = p * p / (2.0 * M) + M * w * w * X * X / 2.0;
    worst = std::max(worst, std::abs(heff - E));
  }
  return worst;
}

Diagnostics diagnostics(const SystemState& s, const DerivedQuantities& dq) {
  const CloudLagrangian l17 = lagrangian_17(s, dq);
  const double w = kPi / dq.T;
  const double p = dq.M * s.Xdot;
  return {p * p / (2.0 * dq.M) + dq.M * w * w * s.X * s.X / 2.0, l17.value, l17.radical};
}

void annotate(TrajectorySeries& series, const DerivedQuantities& dq) {
  series.diagnostics.clear();
  series.diagnostics.reserve(series.samples.size());
  for (const SystemState& s : series.samples) {
    series.diagnostics.push_back(diagnostics(s, dq));
  }
}

}  // namespace inerton

#include "inerton/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "inerton/errors.hpp"
#include "inerton/phase.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw PreconditionError("time must be finite and >= 0, got " + std::to_string(t));
  }
}

void require_oscillator(double E, double M, double T) {
  if (!(E >= 0.0) || !std::isfinite(E)) {
    throw PreconditionError("oscillator energy must be >= 0");
  }
  if (!(M > 0.0) || !(T > 0.0)) {
    throw PreconditionError("oscillator mass and half-period must be > 0");
  }
}

}  // namespace

double particle_velocity(double t, const DerivedQuantities& dq) {
  require_nonnegative_time(t);
  const PeriodPhase ph = period_phase(t, dq.T);
  return dq.v0 * (1.0 - sin_pi(ph.fraction));
}

double particle_position(double t, const DerivedQuantities& dq) {
  require_nonnegative_time(t);
  const PeriodPhase ph = period_phase(t, dq.T);
  // (-1)^k cos(pi t/T) == cos(pi * fraction)
  const double k = static_cast<double>(ph.index);
  return dq.v0 * t + (dq.lambda / kPi) * (cos_pi(ph.fraction) - (1.0 + 2.0 * k));
}

double particle_position_on_branch(double t, const DerivedQuantities& dq,
                                   std::int64_t branch) {
  require_nonnegative_time(t);
  const double sign = (branch % 2 == 0) ? 1.0 : -1.0;
  const double k = static_cast<double>(branch);
  return dq.v0 * t +
         (dq.lambda / kPi) * (sign * cos_pi(t / dq.T) - (1.0 + 2.0 * k));
}

double cloud_position(double t, const DerivedQuantities& dq) {
  require_nonnegative_time(t);
  return (dq.Lambda / kPi) * sin_pi(period_phase(t, dq.T).fraction);
}

double cloud_velocity(double t, const DerivedQuantities& dq) {
  require_nonnegative_time(t);
  return dq.c * cos_pi(period_phase(t, dq.T).fraction);
}

OneSided cloud_velocity_limits(double t, const DerivedQuantities& dq) {
  const double right = cloud_velocity(t, dq);
  const PeriodPhase ph = period_phase(t, dq.T);
  if (ph.on_boundary() && ph.index > 0) {
    return {-dq.c, right};
  }
  return {right, right};
}

SystemState analytic_state(double t, const DerivedQuantities& dq) {
  return {t, particle_position(t, dq), particle_velocity(t, dq),
          cloud_position(t, dq), cloud_velocity(t, dq)};
}

InertonPeriodState inerton_period_solution(std::size_t r, double t_r,
                                           const EnsembleVelocities& ens) {
  if (r >= ens.size()) {
    throw PreconditionError("inerton index out of range");
  }
  const double Tr = ens.T_r[r];
  if (!(t_r >= 0.0) || !(t_r <= Tr)) {
    throw PreconditionError("t_r must lie in [0, T_r]; single-period solution only");
  }
  const double theta = t_r / Tr;
  const double v = ens.v0r[r];

  InertonPeriodState s;
  s.r = r;
  s.t_r = t_r;
  s.xdot_perp = ens.c * cos_pi(theta);
  s.x_perp = (ens.Lambda_r[r] / kPi) * sin_pi(theta);
  s.xdot_par = 3.0 * v / (2.0 * kPi);
  s.Xdot = v * (1.0 - sin_pi(theta));
  s.X = v * t_r + (ens.lambda_r[r] / kPi) * (cos_pi(theta) - 1.0);
  return s;
}

double oscillator_amplitude(double E, double M, double T) {
  require_oscillator(E, M, T);
  const double omega = kPi / T;
  return std::sqrt(2.0 * E / (M * omega * omega));
}

double oscillator_position(double t, double E, double M, double T) {
  return oscillator_amplitude(E, M, T) * sin_pi(t / T);
}

double oscillator_velocity(double t, double E, double M, double T) {
  return oscillator_amplitude(E, M, T) * (kPi / T) * cos_pi(t / T);
}

std::vector<double> uniform_grid(double t0, double t_end, int samples_per_period,
                                 double T) {
  if (samples_per_period < 1 || !(T > 0.0)) {
    throw PreconditionError("grid needs samples_per_period >= 1 and T > 0");
  }
  if (!(t0 >= 0.0) || !(t_end >= t0)) {
    throw PreconditionError("grid needs 0 <= t0 <= t_end");
  }
  const double spp = static_cast<double>(samples_per_period);
  const double steps = (t_end - t0) * spp / T;
  const double n = std::nearbyint(steps);
  if (std::abs(steps - n) > 1e-9 * std::max(1.0, steps)) {
    throw PreconditionError("t_end - t0 must be a whole number of grid steps");
  }
  const auto count = static_cast<std::size_t>(n) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(t0 + static_cast<double>(i) * T / spp);
  }
  grid.back() = t_end;
  return grid;
}

TrajectorySeries sample_trajectory(std::span<const double> grid,
                                   const DerivedQuantities& dq) {
  if (grid.empty()) {
    throw PreconditionError("sample_trajectory: empty grid");
  }
  require_nonnegative_time(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw PreconditionError("sample_trajectory: grid must be strictly increasing");
    }
  }

  TrajectorySeries series;
  series.samples.reserve(grid.size());
  for (double t : grid) {
    series.samples.push_back(analytic_state(t, dq));
  }
  series.grid = {grid.front(), grid.back(), grid.size() > 1 ? grid[1] - grid[0] : 0.0};
  return series;
}

}  // namespace inerton

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "inerton/model.hpp"

namespace inerton {

/// Instantaneous phase state of the particle and its inerton cloud.
struct SystemState {
  double t = 0.0;     ///< proper time
  double X = 0.0;     ///< particle position
  double Xdot = 0.0;  ///< particle speed
  double x = 0.0;     ///< particle-cloud distance
  double xdot = 0.0;  ///< cloud velocity relative to the particle
};

/// Closed-form state of the r-th inerton inside its own collision period.
struct InertonPeriodState {
  std::size_t r = 0;
  double t_r = 0.0;
  double x_perp = 0.0;
  double xdot_perp = 0.0;
  double xdot_par = 0.0;
  double X = 0.0;
  double Xdot = 0.0;
};

/// Per-sample mechanics diagnostics. `l17` is NaN when `radical` < 0.
struct Diagnostics {
  double heff = 0.0;
  double l17 = 0.0;
  double radical = 0.0;
};

struct GridSpec {
  double t0 = 0.0;
  double t_end = 0.0;
  double step = 0.0;  ///< nominal spacing; 0 for a single-point grid
};

struct TrajectorySeries {
  std::vector<SystemState> samples;
  std::vector<Diagnostics> diagnostics;  ///< empty, or one entry per sample
  GridSpec grid;

  bool has_diagnostics() const noexcept {
    return !diagnostics.empty() && diagnostics.size() == samples.size();
  }
};

/// Left and right limits of a quantity that may jump at t = nT.
struct OneSided {
  double left = 0.0;
  double right = 0.0;
};

// Multi-period closed forms. All of these reject t < 0 with PreconditionError.
// Exact multiples of T belong to the period they open (left-closed floor).

/// v0 (1 - |sin(pi t / T)|); exactly v0 at every t = nT.
double particle_velocity(double t, const DerivedQuantities& dq);

/// v0 t + (lambda/pi) {(-1)^[t/T] cos(pi t/T) - (1 + 2[t/T])}.
double particle_position(double t, const DerivedQuantities& dq);

/// The same expression with the floor value forced to `branch`. Used to
/// compare the two one-sided evaluations at t = nT.
double particle_position_on_branch(double t, const DerivedQuantities& dq,
                                   std::int64_t branch);

double cloud_position(double t, const DerivedQuantities& dq);

/// c (-1)^[t/T] cos(pi t/T). At t = nT this is the right limit (+c).
double cloud_velocity(double t, const DerivedQuantities& dq);

/// Both one-sided limits of the cloud velocity. Away from nT they coincide;
/// at nT (n >= 1) they are -c and +c. At t = 0 only the right limit exists
/// and it is reported on both sides.
OneSided cloud_velocity_limits(double t, const DerivedQuantities& dq);

SystemState analytic_state(double t, const DerivedQuantities& dq);

/// Single-period inerton solution. Throws PreconditionError unless
/// r < ens.size() and 0 <= t_r <= T_r.
InertonPeriodState inerton_period_solution(std::size_t r, double t_r,
                                           const EnsembleVelocities& ens);

/// sqrt(2E / (M (pi/T)^2)).
double oscillator_amplitude(double E, double M, double T);

/// Bounded harmonic coordinate A sin(pi t / T). Throws PreconditionError for
/// E < 0 or non-positive M, T.
double oscillator_position(double t, double E, double M, double T);

/// Time derivative of oscillator_position.
double oscillator_velocity(double t, double E, double M, double T);

/// t0, t0 + T/n, ..., t_end. (t_end - t0) must be a whole number of
/// sampling steps; throws PreconditionError otherwise.
std::vector<double> uniform_grid(double t0, double t_end, int samples_per_period,
                                 double T);

/// One closed-form state per grid point. The grid must be non-empty, strictly
/// increasing and start at t >= 0.
TrajectorySeries sample_trajectory(std::span<const double> grid,
                                   const DerivedQuantities& dq);

}  // namespace inerton

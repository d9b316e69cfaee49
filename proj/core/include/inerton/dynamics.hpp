#pragma once

#include <cstddef>
#include <vector>

#include "inerton/model.hpp"
#include "inerton/trajectory.hpp"

namespace inerton {

/// First-order state of the coupled particle-cloud equations.
struct OdeState {
  double X = 0.0;
  double Xdot = 0.0;
  double x = 0.0;
  double xdot = 0.0;

  OdeState& operator+=(const OdeState& o) {
    X += o.X;
    Xdot += o.Xdot;
    x += o.x;
    xdot += o.xdot;
    return *this;
  }
  friend OdeState operator+(OdeState a, const OdeState& b) { return a += b; }
  friend OdeState operator*(double k, const OdeState& s) {
    return {k * s.X, k * s.Xdot, k * s.x, k * s.xdot};
  }
  friend bool operator==(const OdeState&, const OdeState&) = default;
};

/// Coefficients of one instance of the coupled system:
///   X'' = -(pi/T)(v0/c) x',   x'' = (pi/T)(c/v0)(X' - v0).
/// The cloud equations use (v0, T); the per-inerton form uses (v0r, T_r).
struct CoupledSystem {
  double v0 = 0.0;
  double T = 1.0;
  double c = 1.0;
};

enum class StepMethod {
  Rk4,             ///< classical fixed-step fourth order
  DormandPrince45  ///< adaptive embedded 5(4) pair
};

enum class EventMode {
  Scheduled,  ///< reflect at exactly t = nT
  Detected    ///< reflect where x crosses zero with x' < 0; a crossing within
              ///< event_tol * T after a step end is applied at that step end
};

struct IntegratorConfig {
  double step = 1e-3;  ///< fixed step, or the output spacing for the adaptive pair
  StepMethod method = StepMethod::Rk4;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  EventMode event_mode = EventMode::Scheduled;
  /// Allowed |X' - v0| / v0 and |x| / Lambda just before a reflection.
  double event_tol = 1e-6;
  /// Record every n-th step (fixed) or output interval (adaptive).
  int output_stride = 1;
  bool monitor_constraints = true;
  /// Allowed relative excursion outside x, X, X' >= 0 and |x'| <= c.
  double constraint_tol = 1e-6;
};

/// One application of the reflection map at t = nT.
struct ReflectionEvent {
  double t = 0.0;
  OdeState before;
  double velocity_gap = 0.0;  ///< |X' - v0| before the reflection
  double distance_gap = 0.0;  ///< |x| before the reflection
};

struct IntegrationRun {
  TrajectorySeries series;
  std::vector<ReflectionEvent> events;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// Right-hand side (X', X'', x', x''). Depends only on the velocities.
/// Throws DegenerateSystemError when v0 == 0.
OdeState derivatives(const OdeState& s, const CoupledSystem& sys);
OdeState derivatives(const OdeState& s, const DerivedQuantities& dq);

/// x' -> -x'. An involution; all other components are untouched.
OdeState reflect(const OdeState& s);

/// Canonical initial condition (0, v0, 0, c).
OdeState canonical_start(const DerivedQuantities& dq);

/// Integrates from s0 over [t0, t_end], reflecting the cloud velocity at each
/// t = nT in (t0, t_end]. States recorded at an event time are post-reflection,
/// matching the left-closed convention of the closed forms.
///
/// v0 == 0 bypasses integration and returns s0 on every output time.
/// Throws PreconditionError for a bad span or config and IntegrationError on
/// non-finite states, step-size collapse, a reflection whose state is not
/// within event_tol of (X' = v0, x = 0), or a monitored constraint violation.
IntegrationRun integrate(const OdeState& s0, double t0, double t_end,
                         const DerivedQuantities& dq, const IntegratorConfig& cfg);

/// Integrates the r-th inerton's equations from (0, v0r, 0, c) over its single
/// period [0, T_r]. No reflection is applied at T_r.
/// Throws DegenerateSystemError when v0r == 0.
IntegrationRun integrate_inerton(std::size_t r, const EnsembleVelocities& ens,
                                 const IntegratorConfig& cfg);

struct ResidualPair {
  double r1 = 0.0;  ///< particle equation
  double r2 = 0.0;  ///< cloud equation
};

/// Sign convention for the cloud velocity used in analytic_residual.
enum class CloudSign {
  Alternating,  ///< c (-1)^[t/T] cos(pi t/T), the actual solution
  Unflipped     ///< c cos(pi t/T); a deliberately wrong negative control
};

/// Substitutes the closed-form solution and its analytic derivatives into both
/// equations of motion. Rejects t within `cusp_tol` (in units of T) of nT or
/// (n + 1/2)T with PreconditionError.
ResidualPair analytic_residual(double t, const DerivedQuantities& dq,
                               double cusp_tol = 1e-9,
                               CloudSign sign = CloudSign::Alternating);

}  // namespace inerton

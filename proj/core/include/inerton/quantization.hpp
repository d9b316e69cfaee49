#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "inerton/model.hpp"

namespace inerton {

/// Plane monochromatic wave attached to the moving particle.
struct WaveSpec {
  std::complex<double> psi0{1.0, 0.0};
  double lambda = 1.0;  ///< wavelength
  double nu = 1.0;      ///< frequency
  double h = 1.0;       ///< action quantum

  double hbar() const noexcept;
};

/// Closure-consistent wave: lambda = h / (M v0), nu = E / h.
/// Throws DomainError when v0 == 0.
WaveSpec wave_spec(const DerivedQuantities& dq, std::complex<double> psi0 = {1.0, 0.0});

/// Throws PreconditionError unless lambda > 0, nu > 0, h > 0 and |psi0| > 0.
void validate(const WaveSpec& w);

/// Classical turning point sqrt(2E/M) / (pi/T) of the bounded oscillator.
double turning_point(double E, double M, double T);

/// S1(X) = integral_0^X sqrt(2M [E - M (pi/T)^2 X'^2 / 2]) dX', by adaptive
/// Gauss-Kronrod quadrature after X' = X_max sin(theta), which removes the
/// square-root singularity at the turning point.
/// Throws PreconditionError outside 0 <= X <= X_max.
double shortened_action(double X, double E, double M, double T);

/// (E T / pi) [asin(u) + u sqrt(1 - u^2)], u = X / X_max.
double shortened_action_closed_form(double X, double E, double M, double T);

struct ActionResult {
  std::vector<double> X;
  std::vector<double> S1;
  double J = 0.0;
  double X_max = 0.0;
};

/// Shortened action on `points` evenly spaced X in [0, X_max] plus the cyclic
/// increment.
ActionResult action_table(double E, double M, double T, int points);

/// Loop integral of p dX over the cyclic period 2T along the oscillator
/// solution, computed as the time integral of p(t) X'(t).
double cyclic_action(double E, double M, double T);

struct DeBroglie {
  std::optional<double> wavelength;  ///< h / (M v0); empty when v0 == 0
  double nu = 0.0;                   ///< E / h
  double wavelength_residual = 0.0;  ///< wavelength - lambda
  double nu_residual = 0.0;          ///< nu - 1/(2T)
  /// M c^2 / h, listed for comparison only; never part of the closure.
  double total_energy_frequency = 0.0;
};

/// Uses the action quantum fixed by the closure (dq.h).
DeBroglie de_broglie(const DerivedQuantities& dq);

/// Uses an externally imposed action quantum with the mechanics of dq held fixed.
DeBroglie de_broglie(const DerivedQuantities& dq, double h);

/// psi0 exp[2 pi i (X/lambda - nu t)].
std::complex<double> wavefunction(double X, double t, const WaveSpec& w);

struct WavePoint {
  double X = 0.0;
  double t = 0.0;
};

struct SchrodingerResiduals {
  double stationary = 0.0;    ///< max |(hbar^2/2M) psi'' + E psi| / (E |psi0|)
  double time_dependent = 0.0;  ///< max |i hbar dpsi/dt + (hbar^2/2M) psi''| / (E |psi0|)
};

/// Residuals of the stationary and time-dependent wave equations with the
/// analytic derivatives of the plane wave. Throws PreconditionError for E <= 0,
/// M <= 0, an empty grid or an invalid WaveSpec.
SchrodingerResiduals schrodinger_residuals(const WaveSpec& w, double M, double E,
                                           std::span<const WavePoint> grid);

}  // namespace inerton

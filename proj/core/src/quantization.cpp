#include "inerton/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "inerton/errors.hpp"
#include "inerton/phase.hpp"
#include "inerton/trajectory.hpp"

namespace inerton {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kMaxDepth = 10;
constexpr double kQuadTol = 1e-12;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

void require_mechanics(double E, double M, double T) {
  if (!(E >= 0.0) || !std::isfinite(E)) {
    throw PreconditionError("energy must be finite and >= 0");
  }
  if (!(M > 0.0) || !(T > 0.0)) {
    throw PreconditionError("mass and half-period must be > 0");
  }
}

// Returns u = X / X_max clamped to [0, 1], rejecting X outside the allowed region.
double allowed_fraction(double X, double X_max) {
  if (!(X >= 0.0) || X > X_max * (1.0 + 1e-12)) {
    throw PreconditionError("X lies outside the classically allowed region [0, X_max]");
  }
  if (X_max == 0.0) return 0.0;
  return std::min(X / X_max, 1.0);
}

}  // namespace

double WaveSpec::hbar() const noexcept { return h / (2.0 * kPi); }

WaveSpec wave_spec(const DerivedQuantities& dq, std::complex<double> psi0) {
  if (dq.v0 == 0.0) {
    throw DomainError("a particle at rest has no de Broglie wavelength");
  }
  WaveSpec w;
  w.psi0 = psi0;
  w.h = dq.h;
  w.lambda = dq.h / (dq.M * dq.v0);
  w.nu = dq.E / dq.h;
  return w;
}

void validate(const WaveSpec& w) {
  if (!(w.lambda > 0.0) || !(w.nu > 0.0) || !(w.h > 0.0) || !(std::abs(w.psi0) > 0.0)) {
    throw PreconditionError("wave spec needs lambda, nu, h > 0 and psi0 != 0");
  }
}

double turning_point(double E, double M, double T) {
  require_mechanics(E, M, T);
  return std::sqrt(2.0 * E / M) / (kPi / T);
}

double shortened_action(double X, double E, double M, double T) {
  const double X_max = turning_point(E, M, T);
  const double u = allowed_fraction(X, X_max);
  if (u == 0.0) return 0.0;

  const double w = kPi / T;
  auto integrand = [&](double theta) {
    const double Xp = X_max * std::sin(theta);
    const double kinetic = std::max(0.0, E - M * w * w * Xp * Xp / 2.0);
    return std::sqrt(2.0 * M * kinetic) * X_max * std::cos(theta);
  };
  return Kronrod::integrate(integrand, 0.0, std::asin(u), kMaxDepth, kQuadTol);
}

double shortened_action_closed_form(double X, double E, double M, double T) {
  const double X_max = turning_point(E, M, T);
  const double u = allowed_fraction(X, X_max);
  return (E * T / kPi) * (std::asin(u) + u * std::sqrt((1.0 - u) * (1.0 + u)));
}

ActionResult action_table(double E, double M, double T, int points) {
  if (points < 2) {
    throw PreconditionError("action table needs at least two points");
  }
  ActionResult out;
  out.X_max = turning_point(E, M, T);
  for (int i = 0; i < points; ++i) {
    const double X = i + 1 == points ? out.X_max
                                     : out.X_max * static_cast<double>(i) /
                                           static_cast<double>(points - 1);
    out.X.push_back(X);
    out.S1.push_back(shortened_action(X, E, M, T));
  }
  out.J = cyclic_action(E, M, T);
  return out;
}

double cyclic_action(double E, double M, double T) {
  require_mechanics(E, M, T);
  if (E == 0.0) return 0.0;
  auto integrand = [&](double t) {
    const double Xdot = oscillator_velocity(t, E, M, T);
    return M * Xdot * Xdot;  // p dX = p X' dt
  };
  double J = 0.0;
  for (int q = 0; q < 4; ++q) {
    J += Kronrod::integrate(integrand, q * T / 2.0, (q + 1) * T / 2.0, kMaxDepth, kQuadTol);
  }
  return J;
}

DeBroglie de_broglie(const DerivedQuantities& dq) { return de_broglie(dq, dq.h); }

DeBroglie de_broglie(const DerivedQuantities& dq, double h) {
  if (!(h > 0.0) && dq.v0 != 0.0) {
    throw PreconditionError("action quantum must be > 0");
  }
  DeBroglie out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (dq.v0 == 0.0) {
    out.nu = h > 0.0 ? dq.E / h : nan;
    out.wavelength_residual = nan;
    out.nu_residual = out.nu - dq.nu;
    out.total_energy_frequency = h > 0.0 ? dq.M * dq.c * dq.c / h : nan;
    return out;
  }
  out.wavelength = h / (dq.M * dq.v0);
  out.nu = dq.E / h;
  out.wavelength_residual = *out.wavelength - dq.lambda;
  out.nu_residual = out.nu - 1.0 / (2.0 * dq.T);
  out.total_energy_frequency = dq.M * dq.c * dq.c / h;
  return out;
}

std::complex<double> wavefunction(double X, double t, const WaveSpec& w) {
  // Reduce the phase in cycles before scaling so quarter waves land exactly.
  double cycles = X / w.lambda - w.nu * t;
  cycles -= std::floor(cycles);
  const double arg = 2.0 * cycles;
  return w.psi0 * std::complex<double>(cos_pi(arg), sin_pi(arg));
}

SchrodingerResiduals schrodinger_residuals(const WaveSpec& w, double M, double E,
                                           std::span<const WavePoint> grid) {
  validate(w);
  if (!(E > 0.0) || !(M > 0.0)) {
    throw PreconditionError("Schrodinger residuals need E > 0 and M > 0");
  }
  if (grid.empty()) {
    throw PreconditionError("Schrodinger residuals need a non-empty grid");
  }
  const double hbar = w.hbar();
  const double k = 2.0 * kPi / w.lambda;
  const double omega = 2.0 * kPi * w.nu;
  const std::complex<double> i(0.0, 1.0);
  const double norm = E * std::abs(w.psi0);

  SchrodingerResiduals out;
  for (const WavePoint& pt : grid) {
    const std::complex<double> psi = wavefunction(pt.X, pt.t, w);
    const std::complex<double> psi_xx = -k * k * psi;
    const std::complex<double> psi_t = -i * omega * psi;
    const std::complex<double> kinetic = (hbar * hbar / (2.0 * M)) * psi_xx;
    out.stationary = std::max(out.stationary, std::abs(kinetic + E * psi) / norm);
    out.time_dependent =
        std::max(out.time_dependent, std::abs(i * hbar * psi_t + kinetic) / norm);
  }
  return out;
}

}  // namespace inerton

#include "inerton/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "inerton/errors.hpp"

namespace inerton {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (value <= 0.0) {
    throw DomainError(std::string(name) + " must be > 0");
  }
}

void require_subluminal(double v0, double c) {
  require_finite(v0, "v0");
  require_positive(c, "c");
  if (v0 < 0.0) {
    throw DomainError("v0 must be >= 0");
  }
  if (v0 >= c) {
    throw DomainError("v0 must satisfy v0 < c (relativistic singularity at v0 = c)");
  }
}

}  // namespace

double lorentz_factor(double v0, double c) {
  require_subluminal(v0, c);
  const double beta = v0 / c;
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

double relativistic_mass(double M0, double v0, double c) {
  require_positive(M0, "M0");
  return M0 * lorentz_factor(v0, c);
}

double mass_volume_scaling(double v0, double c) { return lorentz_factor(v0, c); }

DerivedQuantities derive_quantities(const ModelParams& params) {
  require_positive(params.M0, "M0");
  require_subluminal(params.v0, params.c);
  if (params.N < 1) {
    throw DomainError("N must be >= 1");
  }

  DerivedQuantities dq;
  dq.M0 = params.M0;
  dq.v0 = params.v0;
  dq.c = params.c;

  const double gamma = lorentz_factor(params.v0, params.c);
  dq.M = params.M0 * gamma;
  dq.m0 = params.M0 * params.v0 * params.v0 / (params.c * params.c);
  dq.m = dq.m0 * gamma;
  dq.E = dq.M * params.v0 * params.v0 / 2.0;
  dq.p0 = dq.M * params.v0;

  if (const auto* given = std::get_if<HGiven>(&params.h_mode)) {
    require_positive(given->h, "h");
    if (dq.E <= 0.0) {
      throw DomainError("h given requires v0 > 0 so that T = h / (2E) is defined");
    }
    dq.h = given->h;
    dq.T = given->h / (2.0 * dq.E);
    require_positive(dq.T, "T (from h / 2E)");
  } else {
    require_positive(params.T, "T");
    dq.T = params.T;
    dq.h = 2.0 * dq.T * dq.E;
  }

  dq.lambda = params.v0 * dq.T;
  dq.Lambda = params.c * dq.T;
  dq.nu = 1.0 / (2.0 * dq.T);
  return dq;
}

EnsembleVelocities ensemble_velocities(const ModelParams& params,
                                       const HalfPeriodRule& rule) {
  const DerivedQuantities dq = derive_quantities(params);
  const auto n = static_cast<std::size_t>(params.N);
  if (!rule.overrides.empty() && rule.overrides.size() != n) {
    throw DomainError("T_r override list must have exactly N entries");
  }

  EnsembleVelocities ens;
  ens.c = dq.c;
  ens.v0r.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    // sin(r pi / 2N) = sin_pi(r / 2N); r = 0 gives exactly v0.
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) /
                              (2.0 * static_cast<double>(n)));
    const double v = r == 0 ? dq.v0 : dq.v0 * (1.0 - s);
    const double Tr = rule.overrides.empty() ? dq.T : rule.overrides[r];
    require_positive(Tr, "T_r");

    ens.v0r.push_back(v);
    ens.m_r.push_back(dq.M0 * v * v / (dq.c * dq.c));
    ens.T_r.push_back(Tr);
    ens.lambda_r.push_back(v * Tr);
    ens.Lambda_r.push_back(dq.c * Tr);
  }
  return ens;
}

double density_transform(double rho0, double v0, double c) {
  require_positive(rho0, "rho0");
  require_subluminal(v0, c);
  const double beta = v0 / c;
  return rho0 / ((1.0 - beta) * (1.0 + beta));
}

HydroParams hydro_params(double rho0, double v0, double c, double T,
                         HalfStage stage) {
  require_positive(T, "T");
  HydroParams hp;
  hp.rho0 = rho0;
  hp.rho = density_transform(rho0, v0, c);
  hp.deltaV = stage == HalfStage::Decelerating ? -v0 : v0;
  hp.deltaL = v0 * T / 2.0;
  hp.deltaT = T / 2.0;
  return hp;
}

double hydrodynamic_residual(double rho0, double v0, double c, double lambda,
                             double T, HalfStage stage,
                             std::optional<double> rho_override) {
  require_positive(T, "T");
  require_finite(lambda, "lambda");
  const double expected = v0 * T;
  const double scale = std::max(std::abs(lambda), std::abs(expected));
  if (std::abs(lambda - expected) > 1e-12 * scale) {
    throw PreconditionError("lambda must equal v0 * T");
  }

  const double rho = rho_override ? *rho_override : density_transform(rho0, v0, c);
  require_positive(rho, "rho");
  // rho - rho0 in closed form avoids cancellation at small v0.
  const double beta = v0 / c;
  const double excess =
      rho_override ? rho - rho0 : rho0 * beta * beta / ((1.0 - beta) * (1.0 + beta));

  const bool decelerating = stage == HalfStage::Decelerating;
  const double dv = decelerating ? -v0 : v0;
  const double drho = decelerating ? excess : -excess;
  const double dl = lambda / 2.0;
  const double dt = T / 2.0;

  if (dl == 0.0) {
    // Element at rest: no velocity change and no interval to differentiate over.
    return drho == 0.0 ? 0.0 : 1.0;
  }

  const double left = rho * dv / dt;
  const double right = -c * c * drho / dl;
  const double norm = std::max({std::abs(left), std::abs(right),
                                std::numeric_limits<double>::min()});
  return (left - right) / norm;
}

}  // namespace inerton

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace inerton {

/// The action quantum is computed from the mechanics as h = 2 T E.
struct HDerived {};

/// The action quantum is supplied; the half-period follows as T = h / (2 E).
struct HGiven {
  double h = 0.0;
};

using HClosure = std::variant<HDerived, HGiven>;

/// Physical inputs of one experiment. Natural units by default (c = M0 = T = 1);
/// every formula keeps c explicit so SI inputs work unchanged.
struct ModelParams {
  double M0 = 1.0;  ///< particle rest mass
  double v0 = 0.6;  ///< initial particle speed
  double c = 1.0;   ///< limiting speed
  double T = 1.0;   ///< collision half-period (ignored under HGiven)
  int N = 4;        ///< number of inertons in the ensemble
  HClosure h_mode = HDerived{};
};

/// Every quantity computable from ModelParams. The inputs that fixed them are
/// carried along so evaluators need a single argument.
struct DerivedQuantities {
  double M0 = 0.0;
  double v0 = 0.0;
  double c = 0.0;
  double T = 0.0;  ///< effective half-period after the h closure

  double lambda = 0.0;  ///< particle spatial period, v0 T
  double Lambda = 0.0;  ///< cloud spatial period, c T
  double m0 = 0.0;      ///< cloud rest mass, M0 v0^2 / c^2
  double M = 0.0;       ///< relativistic particle mass
  double m = 0.0;       ///< relativistic cloud mass
  double E = 0.0;       ///< kinetic energy M v0^2 / 2
  double nu = 0.0;      ///< 1 / (2T)
  double p0 = 0.0;      ///< M v0
  double h = 0.0;       ///< action quantum
};

/// Validates params and computes all derived quantities.
/// Throws DomainError for v0 >= c, negative v0, non-positive M0/T/c, N < 1,
/// non-finite input, or an h closure that cannot be satisfied.
DerivedQuantities derive_quantities(const ModelParams& params);

/// 1 / sqrt(1 - v0^2/c^2). Throws DomainError unless 0 <= v0 < c.
double lorentz_factor(double v0, double c);

/// M0 / sqrt(1 - v0^2/c^2).
double relativistic_mass(double M0, double v0, double c);

/// Factor by which a moving element's mass grows through its contracted volume.
/// Identical to relativistic_mass(1, v0, c).
double mass_volume_scaling(double v0, double c);

/// How per-inerton half-periods T_r are chosen. Empty override means T_r = T.
struct HalfPeriodRule {
  std::vector<double> overrides;
};

struct EnsembleVelocities {
  double c = 0.0;
  std::vector<double> v0r;       ///< emission speeds, v0 (1 - sin(r pi / 2N))
  std::vector<double> m_r;       ///< inerton masses M0 v0r^2 / c^2
  std::vector<double> T_r;       ///< per-inerton half-periods
  std::vector<double> lambda_r;  ///< v0r T_r
  std::vector<double> Lambda_r;  ///< c T_r

  std::size_t size() const noexcept { return v0r.size(); }
};

/// Throws DomainError on invalid params or an override list whose size is
/// not N or that holds a non-positive entry.
EnsembleVelocities ensemble_velocities(const ModelParams& params,
                                       const HalfPeriodRule& rule = {});

/// rho0 / (1 - v0^2/c^2).
double density_transform(double rho0, double v0, double c);

/// The two half-stages of one velocity cycle of the moving element.
enum class HalfStage {
  Decelerating,  ///< v0 -> 0: dv = -v0, drho = rho - rho0
  Accelerating,  ///< 0 -> v0: dv = +v0, drho = rho0 - rho
};

struct HydroParams {
  double rho0 = 0.0;
  double rho = 0.0;
  double deltaV = 0.0;
  double deltaL = 0.0;  ///< lambda / 2
  double deltaT = 0.0;  ///< T / 2
};

/// Builds the discrete-element parameters for the given half-stage with rho
/// taken from density_transform.
HydroParams hydro_params(double rho0, double v0, double c, double T,
                         HalfStage stage = HalfStage::Decelerating);

/// Normalised difference between the two sides of the discrete momentum
/// balance  rho dv/dt = -c^2 drho/dl  on the half-interval (lambda/2, T/2).
///
/// The moving density defaults to density_transform(rho0, v0, c); pass
/// `rho_override` to probe a deliberately inconsistent density.
/// Throws PreconditionError when lambda differs from v0*T beyond 1e-12 relative.
double hydrodynamic_residual(double rho0, double v0, double c, double lambda,
                             double T, HalfStage stage = HalfStage::Decelerating,
                             std::optional<double> rho_override = std::nullopt);

}  // namespace inerton

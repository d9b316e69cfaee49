#pragma once

#include <span>

#include "inerton/model.hpp"
#include "inerton/trajectory.hpp"

namespace inerton {

/// Lagrangian of the particle coupled to its inerton cloud. `radical` is the
/// expression under the square root; `value` is NaN when it is negative.
struct CloudLagrangian {
  double radical = 0.0;
  double value = 0.0;

  bool evaluable() const noexcept { return radical >= 0.0; }
};

struct Momenta {
  double p = 0.0;        ///< M X'
  double p_tilde = 0.0;  ///< m x~'
};

/// The four printed forms of the system Hamiltonian, evaluated as written.
/// H24 and H27 are compared numerically; their equivalence is not assumed.
struct Hamiltonians {
  double H24 = 0.0;   ///< M (pi/T)^2 X^2 + M c^2 + pi sqrt(m M0) v0 x / T
  double H27 = 0.0;   ///< p^2/M + p~^2/m + (M0 c)^2 / M
  double H28 = 0.0;   ///< combined form
  double Heff = 0.0;  ///< p^2/2M + M (pi/T)^2 X^2 / 2
};

struct MechanicsSample {
  double L2 = 0.0;
  double L17 = 0.0;
  double L22 = 0.0;
  double radical = 0.0;
  double p = 0.0;
  double p_tilde = 0.0;
  double x_tilde_dot = 0.0;  ///< NaN when the cloud is massless (v0 = 0)
  Hamiltonians H;
};

/// -M0 c^2 sqrt(1 - v0^2/c^2). Throws DomainError unless 0 <= v0 < c.
double classical_lagrangian(double M0, double v0, double c);

/// radical = 1 - [M0 X'^2 + m0 x'^2 - (2pi/T) sqrt(m0 M0)(X x' + v0 x)] / (M0 c^2)
/// A negative radical is reported, never thrown.
CloudLagrangian lagrangian_17(const SystemState& s, const DerivedQuantities& dq);

/// Same Lagrangian after the cloud velocity substitution, in oscillator form.
CloudLagrangian lagrangian_22(const SystemState& s, const DerivedQuantities& dq);

/// x' - (pi/T) sqrt(M0/m0) X. Throws PreconditionError when m0 == 0.
double canonical_transform(const SystemState& s, const DerivedQuantities& dq);

/// p~ is defined as 0 for a massless cloud (m0 == 0).
Momenta momenta(const SystemState& s, const DerivedQuantities& dq);

/// Terms divided by a zero cloud mass contribute 0.
Hamiltonians hamiltonians(const SystemState& s, const DerivedQuantities& dq);

MechanicsSample evaluate_mechanics(const SystemState& s, const DerivedQuantities& dq);

/// Maximum |Heff(t) - E| along the bounded oscillator solution of amplitude
/// `amplitude_scale` times the energy-consistent one, with p = M dX/dt.
/// Throws PreconditionError for E < 0 or non-positive M, T.
double heff_conservation(double E, double M, double T, std::span<const double> grid,
                         double amplitude_scale = 1.0);

Diagnostics diagnostics(const SystemState& s, const DerivedQuantities& dq);

/// Fills series.diagnostics with one entry per sample.
void annotate(TrajectorySeries& series, const DerivedQuantities& dq);

}  // namespace inerton

#pragma once

#include <cstdint>

namespace inerton {

/// Decomposition t / T = index + fraction with fraction in [0, 1).
///
/// Quotients within a few ulp of an integer snap onto it, so t = n*T is always
/// reported as {n, 0} regardless of how n*T rounded.
struct PeriodPhase {
  std::int64_t index = 0;
  double fraction = 0.0;

  bool on_boundary() const noexcept { return fraction == 0.0; }
};

PeriodPhase period_phase(double t, double period);

/// sin(pi * x) with exact zeros at integers and exact +-1 at half-integers.
double sin_pi(double x);

/// cos(pi * x) with exact zeros at half-integers and exact +-1 at integers.
double cos_pi(double x);

}  // namespace inerton

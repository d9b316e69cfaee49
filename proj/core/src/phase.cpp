#include "inerton/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace inerton {

PeriodPhase period_phase(double t, double period) {
  const double q = t / period;
  const double nearest = std::nearbyint(q);
  const double snap = 4.0 * std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::abs(q));
  if (std::abs(q - nearest) <= snap) {
    return {static_cast<std::int64_t>(nearest), 0.0};
  }
  const double k = std::floor(q);
  return {static_cast<std::int64_t>(k), q - k};
}

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0.0) r += 2.0;
  double sign = 1.0;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  // r in [0, 1)
  if (r == 0.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;  // exact for r in (0.5, 1)
  if (r == 0.5) return sign;
  if (r <= 0.25) return sign * std::sin(std::numbers::pi * r);
  return sign * std::cos(std::numbers::pi * (0.5 - r));
}

double cos_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  return sin_pi(r + 0.5);
}

}  // namespace inerton

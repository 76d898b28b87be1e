#pragma once

// Truncated series for the critical mass ratio at a right contact angle.

#include <cmath>

#include "floatcyl/equilibria.hpp"
#include "floatcyl/params.hpp"

namespace floatcyl {

enum class AsymptoticRegime { SmallC, LargeC };

/// Series approximations of (A*, phi0*) for gamma = pi/2.
///
/// SmallC:  A*    = 2/C^2 + 2 + pi - 2 sqrt2 C            + O(C^2)
///          phi0* = pi - sqrt2 C + 2 C^2 - (7/12) sqrt2 C^3 + O(C^4)
/// LargeC:  A*    = pi + (1/3) 2^(11/4) C^(-3/2)
///          phi0* = pi - 2^(1/4) C^(-1/2) + 2^(-1/2) C^(-1) + (7/3) 2^(-13/4) C^(-3/2)
inline CriticalMass asymptotic_A_star(double C, double gamma, AsymptoticRegime regime) {
  if (std::abs(gamma - pi / 2) > 1e-12)
    throw RegimeError("asymptotic series exist only for gamma = pi/2");
  if (!(C > 0.0)) throw DomainError("C must be strictly positive");
  const double r2 = std::sqrt(2.0);
  if (regime == AsymptoticRegime::SmallC) {
    return {2.0 / (C * C) + 2.0 + pi - 2.0 * r2 * C,
            pi - r2 * C + 2.0 * C * C - 7.0 / 12.0 * r2 * C * C * C};
  }
  const double sq = std::sqrt(C);
  return {pi + std::pow(2.0, 11.0 / 4.0) / 3.0 / (C * sq),
          pi - std::pow(2.0, 0.25) / sq + 1.0 / (r2 * C) +
              7.0 / 3.0 * std::pow(2.0, -13.0 / 4.0) / (C * sq)};
}

}  // namespace floatcyl

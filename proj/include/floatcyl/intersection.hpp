#pragma once

// Self-intersection of the left and right menisci.
//
// When the contact line sits high on the cylinder (or low, for a
// non-wetting contact), the meniscus turns past vertical and may cross the
// symmetry plane before flattening out.  I(phi0, C) = C x(-+pi/2) measures
// where the meniscus is when its tangent is vertical; a non-positive value
// means the two sides cross.

#include <cmath>
#include <optional>

#include "floatcyl/model.hpp"
#include "floatcyl/params.hpp"
#include "floatcyl/profile.hpp"

namespace floatcyl {

class FlatInterface : public DomainError {
 public:
  using DomainError::DomainError;
};

inline double intersection_function(double phi0, double C, double gamma) {
  if (!(C > 0.0)) throw DomainError("C must be strictly positive");
  const double theta = phi0 + gamma;
  if (std::abs(theta - pi) < 1e-14)
    throw FlatInterface("flat interface (phi0 + gamma = pi): menisci cannot intersect");
  return C * std::sin(phi0) - std::sqrt(2.0) - std::log(std::tan(pi / 8)) +
         2.0 * std::sin(0.5 * theta) + std::log(std::abs(std::tan(0.25 * (theta - pi))));
}

enum class Regime { PsiNegative, PsiPositive, NotApplicable };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::PsiNegative: return "psi-negative";
    case Regime::PsiPositive: return "psi-positive";
    case Regime::NotApplicable: return "n/a";
  }
  return "?";
}

struct ValidityReport {
  bool intersecting = false;
  std::optional<double> i_value;
  Regime regime = Regime::NotApplicable;
  struct Conditions {
    bool inclination_range = false;     // meniscus turns past vertical
    bool center_beyond_radius = false;  // h > a (psi < 0) or h < -a (psi > 0)
    bool reach_nonpositive = false;     // x at the vertical tangent <= 0
  } conditions;
};

inline Regime intersection_regime(double phi0, double gamma) {
  if (gamma <= pi / 2 && phi0 >= 0.0 && phi0 <= pi / 2 - gamma) return Regime::PsiNegative;
  if (gamma >= pi / 2 && phi0 >= 3 * pi / 2 - gamma && phi0 <= pi) return Regime::PsiPositive;
  return Regime::NotApplicable;
}

inline ValidityReport validity(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double g = p.gamma();
  const double theta = phi0 + g;
  const double psi0 = theta - pi;
  const double h = height(phi0, p);

  ValidityReport r;
  r.regime = intersection_regime(phi0, g);

  // Diagnostics, evaluated on whichever side the meniscus bends towards.
  if (psi0 <= 0.0) {
    r.conditions.inclination_range = theta >= 0.0 && theta <= pi / 2;
    r.conditions.center_beyond_radius = h > 1.0;
    if (psi0 <= -pi / 2) r.conditions.reach_nonpositive = meniscus::x(-pi / 2, psi0, phi0, C) <= 0.0;
  } else {
    r.conditions.inclination_range = theta >= 3 * pi / 2 && theta <= 2 * pi;
    r.conditions.center_beyond_radius = h < -1.0;
    if (psi0 >= pi / 2) r.conditions.reach_nonpositive = meniscus::x(pi / 2, psi0, phi0, C) <= 0.0;
  }

  if (r.regime == Regime::NotApplicable) return r;
  if (std::abs(theta - pi) < 1e-14) return r;  // cannot happen inside a regime; kept for safety
  r.i_value = intersection_function(phi0, C, g);
  r.intersecting = *r.i_value <= 0.0;
  return r;
}

// C values from the quadratics used to show that low-lying equilibria never
// intersect.  `phi` is the smallest equilibrium at A = 0 (gamma < pi/2) or
// the second critical point (gamma > pi/2).

struct Quadratic {
  double w, p, q;
  double positive_root() const { return (-p + std::sqrt(p * p - 4.0 * w * q)) / (2.0 * w); }
  double operator()(double C) const { return (w * C + p) * C + q; }
};

inline Quadratic zero_mass_root_quadratic(double phi, double gamma) {
  return {phi - 0.5 * std::sin(2.0 * phi), -4.0 * std::cos(0.5 * (phi + gamma)) * std::sin(phi),
          -2.0 * std::sin(phi + gamma)};
}

inline Quadratic critical_point_quadratic(double phi, double gamma) {
  const double half = 0.5 * (phi + gamma);
  return {1.0 - std::cos(2.0 * phi),
          2.0 * std::sin(half) * std::sin(phi) - 4.0 * std::cos(half) * std::cos(phi),
          -2.0 * std::cos(phi + gamma)};
}

}  // namespace floatcyl

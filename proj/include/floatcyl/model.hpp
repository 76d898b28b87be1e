#pragma once

// Closed-form scalar functions of the floating-cylinder model.
//
// Conventions: lengths are in units of the radius a, forces in units of
// sigma (per unit cylinder length) and energies in units of sigma * a.  The
// wetting angle phi0 is measured from the downward vertical and lies in
// [0, pi]; the inclination at the contact point is psi0 = phi0 + gamma - pi.

#include <array>
#include <cmath>

#include "floatcyl/params.hpp"

namespace floatcyl {

/// Height of the cylinder centre above the undisturbed level, h / a.
inline double height(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  return std::cos(phi0) + 2.0 / p.C() * std::cos(0.5 * (phi0 + p.gamma()));
}

/// d(h/a)/dphi0.  Negative on (0, pi) apart from phi0 = gamma = 0 and
/// phi0 = gamma = pi, where it vanishes.
inline double dheight_dphi0(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  return -std::sin(phi0) - std::sin(0.5 * (phi0 + p.gamma())) / p.C();
}

/// Meniscus height at the contact point, u0 / a.
inline double contact_height(double phi0, const DimensionlessParams& p) {
  const double psi0 = Angles::at(phi0, p.gamma()).psi0;
  return -2.0 / p.C() * std::sin(0.5 * psi0);
}

// Vertical force components, in units of sigma.

inline double gravity_force(const DimensionlessParams& p) { return -p.A() * p.bond(); }

inline double surface_tension_force(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  return -2.0 * std::sin(phi0 + p.gamma());
}

inline double buoyancy_force(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  return -4.0 * C * std::cos(0.5 * (phi0 + p.gamma())) * std::sin(phi0) -
         0.5 * C * C * std::sin(2.0 * phi0) + C * C * phi0;
}

/// Net upward force F_T / sigma.
inline double total_force(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double half = 0.5 * (phi0 + p.gamma());
  return -p.A() * C * C - 2.0 * std::sin(phi0 + p.gamma()) -
         4.0 * C * std::cos(half) * std::sin(phi0) - 0.5 * C * C * std::sin(2.0 * phi0) +
         C * C * phi0;
}

/// dF_T/dphi0; independent of A.
inline double dforce_dphi0(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double theta = phi0 + p.gamma();
  const double half = 0.5 * theta;
  return -2.0 * std::cos(theta) + 2.0 * C * std::sin(half) * std::sin(phi0) -
         4.0 * C * std::cos(half) * std::cos(phi0) - C * C * std::cos(2.0 * phi0) + C * C;
}

inline double d2force_dphi02(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double theta = phi0 + p.gamma();
  const double half = 0.5 * theta;
  return 2.0 * std::sin(theta) + 5.0 * C * std::cos(half) * std::sin(phi0) +
         4.0 * C * std::sin(half) * std::cos(phi0) + 2.0 * C * C * std::sin(2.0 * phi0);
}

/// Coefficients of the periodic part of the force,
///   F_T + A C^2 - C^2 phi0 = sum_n a_n cos(n phi0 / 2) + b_n sin(n phi0 / 2),
/// for n = 1..4 (index n-1).
struct ForceSeries {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
};

inline ForceSeries force_series_coefficients(const DimensionlessParams& p) {
  const double C = p.C();
  const double g = p.gamma();
  const double ch = std::cos(0.5 * g);
  const double sh = std::sin(0.5 * g);
  ForceSeries s;
  s.a = {2.0 * C * sh, -2.0 * std::sin(g), -2.0 * C * sh, 0.0};
  s.b = {-2.0 * C * ch, -2.0 * std::cos(g), -2.0 * C * ch, -0.5 * C * C};
  return s;
}

/// Total force evaluated through its trigonometric expansion.
inline double total_force_series(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const ForceSeries s = force_series_coefficients(p);
  double sum = -p.A() * p.bond() + p.bond() * phi0;
  for (int n = 1; n <= 4; ++n) {
    const double arg = 0.5 * n * phi0;
    sum += s.a[n - 1] * std::cos(arg) + s.b[n - 1] * std::sin(arg);
  }
  return sum;
}

/// Energies relative to the undisturbed state, in units of sigma * a.
struct EnergyBreakdown {
  double e_g = 0.0;      // body potential energy
  double e_w = 0.0;      // wetting energy
  double e_sigma = 0.0;  // interface energy
  double e_f1 = 0.0;     // fluid displaced beneath the cylinder
  double e_f2 = 0.0;     // fluid lifted or depressed by the meniscus
  double e_total = 0.0;
};

inline EnergyBreakdown total_energy(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double C2 = C * C;
  const double psi0 = Angles::at(phi0, p.gamma()).psi0;
  const double s = std::sin(0.5 * psi0);
  const double c = std::cos(0.5 * psi0);
  const double sp = std::sin(phi0);

  EnergyBreakdown e;
  e.e_g = p.A() * C2 * height(phi0, p);
  e.e_w = -2.0 * std::cos(p.gamma()) * phi0;
  e.e_sigma = 4.0 / C * (1.0 - c) - 2.0 * sp;
  e.e_f2 = -4.0 / (3.0 * C) * (1.0 - 2.0 * c + c * std::cos(psi0));
  e.e_f1 = C2 * (std::sin(3.0 * phi0) / 12.0 - phi0 * std::cos(phi0) + 0.75 * sp) -
           C * s * std::sin(2.0 * phi0) + 2.0 * C * phi0 * s + 4.0 * s * s * sp;
  e.e_total = e.e_g + e.e_w + e.e_sigma + e.e_f1 + e.e_f2;
  return e;
}

/// Total energy written directly in the wetting angle (contact-angle
/// constraint already eliminated).  Algebraically equal to
/// total_energy().e_total.
inline double total_energy_reduced(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double C2 = C * C;
  const double g = p.gamma();
  const double half = 0.5 * (phi0 + g);
  const double ch = std::cos(half);
  const double sh = std::sin(half);
  return p.A() * C2 * (std::cos(phi0) + 2.0 / C * ch) - 2.0 * phi0 * std::cos(g) +
         8.0 / (3.0 * C) * (1.0 - sh * sh * sh) + 2.0 * std::sin(phi0) * std::cos(phi0 + g) +
         C2 * (std::sin(3.0 * phi0) / 12.0 - phi0 * std::cos(phi0) + 0.75 * std::sin(phi0)) +
         C * ch * std::sin(2.0 * phi0) - 2.0 * C * phi0 * ch;
}

}  // namespace floatcyl

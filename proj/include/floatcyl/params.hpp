#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace floatcyl {

inline constexpr double pi = std::numbers::pi;

/// Raised when an input lies outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a requested quantity does not exist for the parameter regime.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSecondCriticalPoint : public RegimeError {
 public:
  using RegimeError::RegimeError;
};

/// Standard mode requires a positive mass ratio; exploratory mode admits
/// A <= 0 (a body lighter than the surrounding air).
enum class Mode { Standard, Exploratory };

namespace detail {

inline std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Snap angles that overshoot [0, pi] by rounding (e.g. degree conversion).
inline double snap_angle(double x) {
  constexpr double slack = 1e-12;
  if (x < 0.0 && x > -slack) return 0.0;
  if (x > pi && x < pi + slack) return pi;
  return x;
}

}  // namespace detail

/// The triple (A, C, gamma) that fixes the whole equilibrium structure.
///
/// A = m / (a^2 rho) is the mass ratio, C = sqrt(kappa) a the radius measured
/// in capillary lengths (so C^2 is the Bond number) and gamma the contact
/// angle in radians.
class DimensionlessParams {
 public:
  DimensionlessParams(double A, double C, double gamma, Mode mode = Mode::Standard)
      : A_(A), C_(C), gamma_(detail::snap_angle(gamma)), mode_(mode) {
    if (!std::isfinite(A_))
      throw DomainError("A must be finite (got " + detail::fmt_value(A) + ")");
    if (mode_ == Mode::Standard && !(A_ > 0.0))
      throw DomainError("A must be strictly positive in standard mode (got " +
                        detail::fmt_value(A) + ")");
    if (!(C_ > 0.0) || !std::isfinite(C_))
      throw DomainError("C must be strictly positive (got " + detail::fmt_value(C) + ")");
    if (!(gamma_ >= 0.0 && gamma_ <= pi))
      throw DomainError("gamma must lie in [0, pi] (got " + detail::fmt_value(gamma) + ")");
  }

  double A() const { return A_; }
  double C() const { return C_; }
  double gamma() const { return gamma_; }
  Mode mode() const { return mode_; }
  double bond() const { return C_ * C_; }

  DimensionlessParams with_A(double A) const { return {A, C_, gamma_, mode_}; }

 private:
  double A_;
  double C_;
  double gamma_;
  Mode mode_;
};

/// Dimensional description of the cylinder and bath (per unit length).
struct PhysicalParams {
  double m;      // mass per unit length
  double rho;    // fluid-air density difference
  double sigma;  // surface tension
  double g;      // gravitational acceleration
  double a;      // cylinder radius

  double kappa() const { return rho * g / sigma; }
};

inline DimensionlessParams to_dimensionless(const PhysicalParams& p, double gamma,
                                            Mode mode = Mode::Standard) {
  auto require = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError(std::string("physical parameter ") + name +
                        " must be strictly positive (got " + detail::fmt_value(v) + ")");
  };
  require(p.m, "m");
  require(p.rho, "rho");
  require(p.sigma, "sigma");
  require(p.g, "g");
  require(p.a, "a");
  return {p.m / (p.a * p.a * p.rho), p.a * std::sqrt(p.kappa()), gamma, mode};
}

/// Wetting angle and the contact-point inclination tied to it through the
/// contact angle.
struct Angles {
  double phi0;
  double psi0;

  static Angles at(double phi0, double gamma) { return {phi0, phi0 + gamma - pi}; }
};

inline void require_wetting_angle(double phi0) {
  if (!(phi0 >= 0.0 && phi0 <= pi))
    throw DomainError("wetting angle phi0 must lie in [0, pi] (got " +
                      detail::fmt_value(phi0) + ")");
}

}  // namespace floatcyl

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "floatcyl/model.hpp"
#include "floatcyl/params.hpp"

namespace floatcyl {

struct ProfileSample {
  double psi;  // inclination of the interface tangent
  double x;    // horizontal position / a
  double u;    // height above the undisturbed level / a
};

/// Right-hand meniscus (x > 0), ordered from the contact point outwards.
struct InterfaceProfile {
  std::vector<ProfileSample> samples;
  double psi0 = 0.0;
  double contact_x = 0.0;
  double contact_u = 0.0;
  bool flat = false;
};

inline constexpr double kDefaultPsiCutoff = 1e-6;

namespace meniscus {

// Closed-form solution of the capillary equation, in units of a.  The
// horizontal coordinate diverges logarithmically as psi -> 0.

inline double u(double psi, double C) { return -2.0 / C * std::sin(0.5 * psi); }

inline double x(double psi, double psi0, double phi0, double C) {
  const auto g = [](double t) {
    return 2.0 * std::cos(0.5 * t) + std::log(std::abs(std::tan(0.25 * t)));
  };
  return -(g(psi) - g(psi0)) / C + std::sin(phi0);
}

inline double du_dpsi(double psi, double C) { return -std::cos(0.5 * psi) / C; }

inline double dx_dpsi(double psi, double C) {
  const double s = std::sin(0.5 * psi);
  return -(-s + 0.5 / s) / C;
}

}  // namespace meniscus

/// Samples the meniscus between the contact point and psi = +-psi_cutoff.
///
/// Samples are geometrically spaced in |psi| so the slowly decaying tail is
/// resolved.  A flat interface (psi0 == 0) yields a two-point profile with
/// `flat` set.
inline InterfaceProfile interface_profile(double phi0, const DimensionlessParams& p,
                                          std::size_t n = 200,
                                          double psi_cutoff = kDefaultPsiCutoff) {
  require_wetting_angle(phi0);
  if (n < 2) throw DomainError("interface_profile needs at least two samples");
  const double C = p.C();
  const double psi0 = Angles::at(phi0, p.gamma()).psi0;

  InterfaceProfile prof;
  prof.psi0 = psi0;
  prof.contact_x = std::sin(phi0);
  prof.contact_u = meniscus::u(psi0, C);

  if (std::abs(psi0) < 1e-12) {
    prof.flat = true;
    prof.psi0 = 0.0;
    prof.contact_u = 0.0;
    prof.samples = {{0.0, prof.contact_x, 0.0}, {0.0, prof.contact_x + 10.0 / C, 0.0}};
    return prof;
  }
  if (!(psi_cutoff > 0.0 && psi_cutoff < std::abs(psi0)))
    throw DomainError("psi_cutoff must lie in (0, |psi0|)");

  const double sign = psi0 > 0.0 ? 1.0 : -1.0;
  const double ratio = psi_cutoff / std::abs(psi0);
  prof.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    const double psi = k == 0 ? psi0 : sign * std::abs(psi0) * std::pow(ratio, t);
    prof.samples.push_back({psi, meniscus::x(psi, psi0, phi0, C), meniscus::u(psi, C)});
  }
  prof.samples.front().x = prof.contact_x;
  return prof;
}

}  // namespace floatcyl

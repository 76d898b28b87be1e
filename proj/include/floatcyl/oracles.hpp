#pragma once

// Independent recomputation of the closed forms: quadrature of the defining
// integrals, finite differences, Fourier projection and a geometric
// Archimedes comparison.  Nothing here calls back into the closed-form
// expression it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "floatcyl/model.hpp"
#include "floatcyl/params.hpp"
#include "floatcyl/profile.hpp"

namespace floatcyl {

class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleReport {
  std::string name;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;  // |a - b| / max(1, |b|)
  std::size_t samples = 0;
  bool passed = true;
  double tolerance = 0.0;

  // Record one comparison of `got` against `want`.
  void add(double got, double want) {
    const double abs_err = std::abs(got - want);
    const double rel_err = abs_err / std::max(1.0, std::abs(want));
    max_abs_err = std::max(max_abs_err, abs_err);
    max_rel_err = std::max(max_rel_err, rel_err);
    ++samples;
    if (!(rel_err <= tolerance)) passed = false;
  }
};

inline constexpr double kQuadratureTolerance = 1e-10;
inline constexpr unsigned kQuadratureMaxDepth = 40;

namespace detail {

template <class F>
double integrate(F f, double a, double b, double tol = kQuadratureTolerance) {
  if (a == b) return 0.0;
  // Boost floors the per-panel error at 2 eps |K| before scaling by the
  // panel width, so a very short [a, b] can never meet a relative target.
  // Integrating over [0, 1] keeps that floor in the right units.
  const double w = b - a;
  auto g = [&](double t) { return f(a + w * t); };
  double err = 0.0, l1 = 0.0;
  const double v = w * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                           g, 0.0, 1.0, kQuadratureMaxDepth, tol, &err, &l1);
  if (!std::isfinite(v) || err > 10.0 * tol * std::max(1e-300, l1))
    throw OracleFailure("quadrature did not converge on [" + fmt_value(a) + ", " + fmt_value(b) +
                        "]: error estimate " + fmt_value(err));
  return v;
}

}  // namespace detail

/// Interface energy from the arc length of the parametric meniscus, minus
/// the flat reference, minus the free surface removed by the cylinder.
inline double esigma_quadrature(double phi0, const DimensionlessParams& p,
                                double tol = kQuadratureTolerance) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double psi0 = Angles::at(phi0, p.gamma()).psi0;
  if (std::abs(psi0) < 1e-12) return -2.0 * std::sin(phi0);
  // ds - dx = (1 - cos psi) ds along the meniscus, with ds = |r_psi| |dpsi|.
  // Written this way the integrand has no cancellation near psi = 0.
  auto integrand = [&](double psi) {
    const double s = std::sin(0.5 * psi);
    const double speed = 1.0 / (2.0 * C * std::abs(s));
    return 2.0 * s * s * speed;
  };
  const double lo = std::min(psi0, 0.0), hi = std::max(psi0, 0.0);
  return 2.0 * detail::integrate(integrand, lo, hi, tol) - 2.0 * std::sin(phi0);
}

struct FluidEnergy {
  double e_f1;
  double e_f2;
};

/// Fluid potential energy: the column between the wetted arc and the free
/// level (e_f1) and the fluid raised or lowered by both menisci (e_f2).
inline FluidEnergy efluid_quadrature(double phi0, const DimensionlessParams& p,
                                     double tol = kQuadratureTolerance) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double C2 = C * C;
  const double psi0 = Angles::at(phi0, p.gamma()).psi0;
  const double H = std::cos(phi0) + meniscus::u(psi0, C);

  FluidEnergy e{};
  e.e_f1 = C2 * detail::integrate(
                    [&](double phi) {
                      const double d = std::cos(phi) - H;
                      return d * d * std::cos(phi);
                    },
                    0.0, phi0, tol);
  if (std::abs(psi0) >= 1e-12) {
    e.e_f2 = C2 * detail::integrate(
                      [&](double psi) {
                        const double u = meniscus::u(psi, C);
                        return u * u * meniscus::dx_dpsi(psi, C);
                      },
                      psi0, 0.0, tol);
  }
  return e;
}

/// Vertical pressure force on the wetted arc, in units of sigma.  The
/// hydrostatic pressure at the arc point at angle phi is rho g a (cos phi - h/a).
inline double buoyancy_quadrature(double phi0, const DimensionlessParams& p,
                                  double tol = kQuadratureTolerance) {
  require_wetting_angle(phi0);
  const double C = p.C();
  const double H = std::cos(phi0) + meniscus::u(Angles::at(phi0, p.gamma()).psi0, C);
  return C * C * detail::integrate(
                     [&](double phi) { return (std::cos(phi) - H) * std::cos(phi); }, -phi0,
                     phi0, tol);
}

/// Signed area (units a^2) between the wetted arc, the vertical lines
/// through the contact points, and the free level: the circular segment cut
/// off by the contact chord plus the rectangle between chord and level.
inline double displaced_area(double phi0, const DimensionlessParams& p) {
  require_wetting_angle(phi0);
  const double u0 = meniscus::u(Angles::at(phi0, p.gamma()).psi0, p.C());
  return (phi0 - 0.5 * std::sin(2.0 * phi0)) - 2.0 * std::sin(phi0) * u0;
}

/// Area of the cylinder cross-section below the free level, ignoring the
/// meniscus.
inline double submerged_segment_area(double phi0, const DimensionlessParams& p) {
  const double H = std::cos(phi0) + meniscus::u(Angles::at(phi0, p.gamma()).psi0, p.C());
  if (H >= 1.0) return 0.0;
  if (H <= -1.0) return pi;
  const double alpha = std::acos(H);
  return alpha - 0.5 * std::sin(2.0 * alpha);
}

/// dE_T/dphi0 differentiated term by term from the reduced energy.
inline double denergy_dphi0_analytic(double phi0, const DimensionlessParams& p) {
  const double A = p.A(), C = p.C(), C2 = C * C;
  const double th = phi0 + p.gamma();
  const double sh = std::sin(0.5 * th), ch = std::cos(0.5 * th);
  const double sp = std::sin(phi0), s2 = std::sin(2.0 * phi0), st = std::sin(th);
  return -A * C2 * sp - A * C * sh - 2.0 * sp * st - 2.0 / C * st * sh - 4.0 * sh * ch * sp -
         4.0 * C * sp * sp * ch - 0.5 * C2 * sp * s2 - 0.5 * C * sh * s2 + C2 * phi0 * sp +
         C * phi0 * sh;
}

inline double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

/// Grid phi_k = pi k / (n + 1), k = 1..n.
inline std::vector<double> interior_grid(int n) {
  std::vector<double> g(n);
  for (int k = 1; k <= n; ++k) g[k - 1] = pi * k / (n + 1);
  return g;
}

/// -(dE/dphi0) / (dh/dphi0) = F, with dE/dphi0 by central differences.
inline OracleReport energy_force_identity_check(const DimensionlessParams& p, int n = 200) {
  OracleReport r{"energy_force_identity", 0, 0, 0, true, 1e-6};
  for (double phi : interior_grid(n)) {
    const double dh = -std::sin(phi) - std::sin(0.5 * (phi + p.gamma())) / p.C();
    if (std::abs(dh) < 1e-9) continue;  // phi0 = gamma = 0 or pi
    const double h = fd_step(phi);
    const double dE =
        (total_energy(phi + h, p).e_total - total_energy(phi - h, p).e_total) / (2.0 * h);
    r.add(-dE / dh, total_force(phi, p));
  }
  return r;
}

/// dE/dphi0 = F (sin phi0 + sin((phi0 + gamma)/2) / C), analytically.
inline OracleReport energy_force_factored_check(const DimensionlessParams& p, int n = 200) {
  OracleReport r{"energy_force_factored", 0, 0, 0, true, 1e-10};
  for (double phi : interior_grid(n)) {
    const double factor = std::sin(phi) + std::sin(0.5 * (phi + p.gamma())) / p.C();
    r.add(denergy_dphi0_analytic(phi, p), total_force(phi, p) * factor);
  }
  return r;
}

inline constexpr int kFourierNodes = 4096;

/// Projects the periodic part of the force onto cos/sin(n phi / 2) over one
/// period [0, 4 pi] with the periodic trapezoid rule.
inline OracleReport fourier_projection_check(const DimensionlessParams& p) {
  OracleReport r{"fourier_projection", 0, 0, 0, true, 1e-8};
  const double C = p.C(), g = p.gamma();
  auto fbar = [&](double phi) {
    return -2.0 * std::sin(phi + g) - 4.0 * C * std::cos(0.5 * (phi + g)) * std::sin(phi) -
           0.5 * C * C * std::sin(2.0 * phi);
  };
  std::vector<double> f(kFourierNodes);
  const double dphi = 4.0 * pi / kFourierNodes;
  for (int k = 0; k < kFourierNodes; ++k) f[k] = fbar(k * dphi);

  const ForceSeries want = force_series_coefficients(p);
  for (int n = 1; n <= 4; ++n) {
    double an = 0.0, bn = 0.0;
    for (int k = 0; k < kFourierNodes; ++k) {
      an += f[k] * std::cos(0.5 * n * k * dphi);
      bn += f[k] * std::sin(0.5 * n * k * dphi);
    }
    an *= dphi / (2.0 * pi);
    bn *= dphi / (2.0 * pi);
    r.add(an, want.a[n - 1]);
    r.add(bn, want.b[n - 1]);
  }
  return r;
}

struct OracleSample {
  double A, C, gamma, phi0;
};

/// Deterministic random parameter sets: A in (0, 12], C in [0.1, 5],
/// gamma in [0, pi], phi0 in (0, pi).
inline std::vector<OracleSample> oracle_samples(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uA(1e-3, 12.0), uC(0.1, 5.0), ug(0.0, pi),
      uphi(1e-3, pi - 1e-3);
  std::vector<OracleSample> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double A = uA(rng), C = uC(rng), g = ug(rng), phi = uphi(rng);
    out.push_back({A, C, g, phi});
  }
  return out;
}

/// Runs every check over `n_sets` random parameter sets.
inline std::vector<OracleReport> run_oracle_suite(std::uint64_t seed = 20240601, int n_sets = 100) {
  const auto samples = oracle_samples(seed, n_sets);
  OracleReport esig{"esigma_quadrature", 0, 0, 0, true, 1e-8};
  OracleReport ef1{"efluid_f1_quadrature", 0, 0, 0, true, 1e-8};
  OracleReport ef2{"efluid_f2_quadrature", 0, 0, 0, true, 1e-8};
  OracleReport fb{"buoyancy_quadrature", 0, 0, 0, true, 1e-8};
  OracleReport area{"archimedes_displaced_area", 0, 0, 0, true, 1e-8};
  OracleReport seg{"archimedes_segment_differs", 0, 0, 0, true, 1e-8};
  OracleReport conv{"quadrature_convergence", 0, 0, 0, true, 10 * kQuadratureTolerance};
  OracleReport series{"force_series_equivalence", 0, 0, 0, true, 1e-12};
  OracleReport reduced{"energy_reduced_form", 0, 0, 0, true, 1e-10};
  OracleReport dF{"dforce_finite_difference", 0, 0, 0, true, 1e-7};
  OracleReport ident{"energy_force_identity", 0, 0, 0, true, 1e-6};
  OracleReport fact{"energy_force_factored", 0, 0, 0, true, 1e-10};
  OracleReport four{"fourier_projection", 0, 0, 0, true, 1e-8};

  auto merge = [](OracleReport& into, const OracleReport& from) {
    into.max_abs_err = std::max(into.max_abs_err, from.max_abs_err);
    into.max_rel_err = std::max(into.max_rel_err, from.max_rel_err);
    into.samples += from.samples;
    into.passed = into.passed && from.passed;
  };
  auto guarded = [](OracleReport& r, const std::function<void()>& body) {
    try {
      body();
    } catch (const OracleFailure&) {
      r.passed = false;
      ++r.samples;
    }
  };

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    const DimensionlessParams p(s.A, s.C, s.gamma);
    const EnergyBreakdown e = total_energy(s.phi0, p);

    guarded(esig, [&] { esig.add(esigma_quadrature(s.phi0, p), e.e_sigma); });
    guarded(ef1, [&] {
      const auto q = efluid_quadrature(s.phi0, p);
      ef1.add(q.e_f1, e.e_f1);
      ef2.add(q.e_f2, e.e_f2);
    });
    guarded(fb, [&] { fb.add(buoyancy_quadrature(s.phi0, p), buoyancy_force(s.phi0, p)); });
    area.add(p.bond() * displaced_area(s.phi0, p), buoyancy_force(s.phi0, p));

    const double u0 = meniscus::u(Angles::at(s.phi0, s.gamma).psi0, s.C);
    if (std::abs(u0) > 1e-6) {
      const double diff =
          std::abs(buoyancy_force(s.phi0, p) - p.bond() * submerged_segment_area(s.phi0, p));
      ++seg.samples;
      seg.max_abs_err = std::max(seg.max_abs_err, diff);
      if (!(diff > seg.tolerance)) seg.passed = false;
    }

    guarded(conv, [&] {
      const double t = kQuadratureTolerance;
      conv.add(esigma_quadrature(s.phi0, p, t), esigma_quadrature(s.phi0, p, t / 10));
      conv.add(efluid_quadrature(s.phi0, p, t).e_f2, efluid_quadrature(s.phi0, p, t / 10).e_f2);
      conv.add(buoyancy_quadrature(s.phi0, p, t), buoyancy_quadrature(s.phi0, p, t / 10));
    });

    series.add(total_force_series(s.phi0, p), total_force(s.phi0, p));
    reduced.add(total_energy_reduced(s.phi0, p), e.e_total);

    if (s.phi0 > 1e-5 && s.phi0 < pi - 1e-5) {
      const double h = fd_step(s.phi0);
      dF.add((total_force(s.phi0 + h, p) - total_force(s.phi0 - h, p)) / (2.0 * h),
             dforce_dphi0(s.phi0, p));
    }

    if (k < 50) {
      merge(ident, energy_force_identity_check(p, 200));
      merge(fact, energy_force_factored_check(p, 200));
    }
    merge(four, fourier_projection_check(p));
  }
  return {esig, ef1, ef2, fb, area, seg, conv, series, reduced, dF, ident, fact, four};
}

}  // namespace floatcyl

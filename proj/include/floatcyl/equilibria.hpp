#pragma once

// Force-balance points of the floating cylinder and their stability.
//
// The total force F(phi0) has at most two critical points on [0, pi]: a
// minimum at small phi0 and a maximum past pi/2.  Their brackets depend only
// on which side of pi/2 the contact angle lies, so the search below splits
// [0, pi] into monotone segments at the critical points and bisects every
// segment whose ends change sign.  A dense scan backs up the bracket
// structure near the edges of each regime.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "floatcyl/model.hpp"
#include "floatcyl/params.hpp"

namespace floatcyl {

inline constexpr double kPhiTolerance = 1e-12;
inline constexpr double kTangencyTolerance = 1e-6;
inline constexpr int kFallbackScanPoints = 1000;

enum class Stability { Stable, Unstable, MarginalUnstable };

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::MarginalUnstable: return "marginal-unstable";
  }
  return "?";
}

struct Equilibrium {
  double phi0_bar;
  Stability stability;
  double dforce_at_root;
  double height;  // h / a
};

enum class CriticalKind { FirstMin, SecondMax };

struct CriticalPoint {
  double phi0_star;
  CriticalKind kind;
};

struct EquilibriumSet {
  std::vector<Equilibrium> roots;  // ascending phi0_bar
  bool fallback_used = false;      // a root was only found by the dense scan
  bool inconsistent = false;       // more than two roots: contradicts the model

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  const Equilibrium& operator[](std::size_t i) const { return roots[i]; }
};

/// |F| below this counts as zero.  Scales with the largest terms of F so that
/// rounding in A C^2 and C^2 phi0 cannot flip a sign.
inline double force_tolerance(const DimensionlessParams& p) {
  return 1e-12 * (1.0 + p.bond() * (std::abs(p.A()) + pi) + 4.0 * p.C() + 2.0);
}

inline Stability classify(double dforce) {
  if (dforce > kTangencyTolerance) return Stability::Stable;
  if (dforce < -kTangencyTolerance) return Stability::Unstable;
  return Stability::MarginalUnstable;
}

namespace detail {

template <class F>
double bisect_root(F f, double lo, double hi) {
  auto done = [](double a, double b) { return std::abs(b - a) <= kPhiTolerance; };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::bisect(f, lo, hi, done, iters);
  return 0.5 * (r.first + r.second);
}

// Root of f in [lo, hi] where f goes from `from_sign` to the opposite sign.
// Falls back to a dense scan when the endpoints do not bracket.
template <class F>
std::optional<double> directed_root(F f, double lo, double hi, double from_sign) {
  const double flo = f(lo), fhi = f(hi);
  if (flo * from_sign > 0.0 && fhi * from_sign < 0.0) return bisect_root(f, lo, hi);
  double x0 = lo, f0 = flo;
  for (int k = 1; k <= kFallbackScanPoints; ++k) {
    const double x1 = lo + (hi - lo) * k / kFallbackScanPoints;
    const double f1 = f(x1);
    if (f0 * from_sign > 0.0 && f1 * from_sign < 0.0) return bisect_root(f, x0, x1);
    x0 = x1;
    f0 = f1;
  }
  return std::nullopt;
}

}  // namespace detail

/// Critical points of F on [0, pi] (one or two), ascending.
inline std::vector<CriticalPoint> critical_points(const DimensionlessParams& p) {
  const auto d = [&p](double x) { return dforce_dphi0(x, p); };
  struct Bracket {
    double lo, hi;
    CriticalKind kind;
  };
  std::vector<Bracket> brackets;
  const double g = p.gamma();
  if (std::abs(g - pi / 2) <= 1e-14) {
    brackets = {{0.0, pi / 2, CriticalKind::FirstMin}, {pi / 2, pi, CriticalKind::SecondMax}};
  } else if (g > pi / 2) {
    if (d(0.0) < 0.0) brackets.push_back({0.0, pi / 4, CriticalKind::FirstMin});
    brackets.push_back({pi / 2, pi, CriticalKind::SecondMax});
  } else {
    brackets.push_back({0.0, pi / 2, CriticalKind::FirstMin});
    if (d(pi) < 0.0) brackets.push_back({3 * pi / 4, pi, CriticalKind::SecondMax});
  }

  std::vector<CriticalPoint> out;
  for (const auto& b : brackets) {
    const double from = b.kind == CriticalKind::FirstMin ? -1.0 : 1.0;
    if (auto r = detail::directed_root(d, b.lo, b.hi, from)) out.push_back({*r, b.kind});
  }
  return out;
}

/// All force-balance points in [0, pi], ascending, with stability.
inline EquilibriumSet find_equilibria(const DimensionlessParams& p) {
  const auto F = [&p](double x) { return total_force(x, p); };
  const double ftol = force_tolerance(p);

  std::vector<double> knots{0.0};
  for (const auto& c : critical_points(p)) knots.push_back(c.phi0_star);
  knots.push_back(pi);
  std::sort(knots.begin(), knots.end());

  std::vector<double> fk;
  fk.reserve(knots.size());
  for (double k : knots) fk.push_back(F(k));

  std::vector<double> roots;
  for (std::size_t i = 0; i < knots.size(); ++i)
    if (std::abs(fk[i]) <= ftol) roots.push_back(knots[i]);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double fl = fk[i], fr = fk[i + 1];
    if (std::abs(fl) > ftol && std::abs(fr) > ftol && (fl < 0.0) != (fr < 0.0))
      roots.push_back(detail::bisect_root(F, knots[i], knots[i + 1]));
  }

  EquilibriumSet out;
  // Dense scan: any sign change not already explained by a root is a root the
  // bracket structure missed.
  double x0 = 0.0, f0 = fk.front();
  for (int k = 1; k <= kFallbackScanPoints; ++k) {
    const double x1 = pi * k / kFallbackScanPoints;
    const double f1 = F(x1);
    if (std::abs(f0) > ftol && std::abs(f1) > ftol && (f0 < 0.0) != (f1 < 0.0)) {
      const bool known = std::any_of(roots.begin(), roots.end(), [&](double r) {
        return r >= x0 - 1e-9 && r <= x1 + 1e-9;
      });
      if (!known) {
        roots.push_back(detail::bisect_root(F, x0, x1));
        out.fallback_used = true;
      }
    }
    x0 = x1;
    f0 = f1;
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              roots.end());

  for (double r : roots) {
    const double d = dforce_dphi0(r, p);
    out.roots.push_back({r, classify(d), d, height(r, p)});
  }
  out.inconsistent = out.roots.size() > 2;
  return out;
}

struct CriticalMass {
  double A_star;
  double phi0_star;
};

/// Mass ratio at which the force maximum past pi/2 touches zero; beyond it
/// the equilibrium pair disappears.  A enters F only through -A C^2, so
/// A* = F(phi0*; A = 0) / C^2 exactly.
inline CriticalMass critical_A_star(double C, double gamma) {
  const DimensionlessParams p0(0.0, C, gamma, Mode::Exploratory);
  for (const auto& c : critical_points(p0))
    if (c.kind == CriticalKind::SecondMax)
      return {total_force(c.phi0_star, p0) / p0.bond(), c.phi0_star};
  throw NoSecondCriticalPoint("no critical point beyond pi/2 for C = " +
                              detail::fmt_value(C) + ", gamma = " + detail::fmt_value(gamma));
}

}  // namespace floatcyl

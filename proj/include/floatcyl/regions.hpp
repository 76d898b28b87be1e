#pragma once

// Classification of the (A, C) plane at fixed contact angle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "floatcyl/equilibria.hpp"
#include "floatcyl/intersection.hpp"
#include "floatcyl/model.hpp"
#include "floatcyl/params.hpp"

namespace floatcyl {

enum class RegionCode : std::uint8_t { Zero, One, Two, OneValidOneInvalid };

inline const char* to_string(RegionCode c) {
  switch (c) {
    case RegionCode::Zero: return "0";
    case RegionCode::One: return "1";
    case RegionCode::Two: return "2";
    case RegionCode::OneValidOneInvalid: return "1v1iv";
  }
  return "?";
}

enum class CurveKind { C1, C2, C3 };

inline const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::C1: return "C1";
    case CurveKind::C2: return "C2";
    case CurveKind::C3: return "C3";
  }
  return "?";
}

struct BoundaryCurve {
  CurveKind kind = CurveKind::C1;
  std::vector<std::pair<double, double>> points;  // (A, C)
  bool analytic = false;
  std::vector<double> gaps;  // samples for which no point was found
};

struct RegionMap {
  double gamma = 0.0;
  std::vector<double> a_axis;
  std::vector<double> c_axis;
  std::vector<RegionCode> labels;  // row-major, index i * c_axis.size() + j
  std::vector<BoundaryCurve> curves;

  RegionCode at(std::size_t i, std::size_t j) const { return labels[i * c_axis.size() + j]; }
};

// ---- C1: F(pi) = 0 -------------------------------------------------------

struct C1Value {
  bool vertical = false;       // gamma in {0, pi}: the curve is the line A = pi
  std::optional<double> C;     // empty where the curve is undefined
};

inline bool contact_angle_is_extreme(double gamma) {
  return std::abs(gamma) < 1e-14 || std::abs(gamma - pi) < 1e-14;
}

inline C1Value curve_c1(double gamma, double A) {
  if (contact_angle_is_extreme(gamma)) return {true, std::nullopt};
  if (!(A > pi)) return {};
  return {false, std::sqrt(2.0 * std::sin(gamma) / (A - pi))};
}

// ---- C2: the force maximum past pi/2 touches zero ------------------------

/// Smallest C for which a second critical point exists: dF/dphi0(pi) < 0
/// reduces to C > cos(gamma) / (2 sin(gamma/2)).  Infinite at gamma = 0.
inline double c2_threshold(double gamma) {
  if (gamma >= pi / 2) return 0.0;
  const double s = std::sin(0.5 * gamma);
  if (s <= 0.0) return INFINITY;
  return std::cos(gamma) / (2.0 * s);
}

namespace detail {

inline std::optional<double> a_star_or_none(double C, double gamma) {
  try {
    return critical_A_star(C, gamma).A_star;
  } catch (const NoSecondCriticalPoint&) {
    return std::nullopt;
  }
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1));
  return v;
}

}  // namespace detail

inline constexpr double kC2SearchMin = 1e-3;
inline constexpr double kC2SearchMax = 1e3;

/// For each A, the C values where A*(C) = A.  A* is single-valued in C, so
/// the search scans a log grid of C and bisects every crossing.
inline BoundaryCurve curve_c2(double gamma, const std::vector<double>& A_samples) {
  BoundaryCurve out;
  out.kind = CurveKind::C2;
  const double c0 = c2_threshold(gamma);
  if (!std::isfinite(c0)) {
    out.gaps = A_samples;
    return out;
  }
  const double lo = std::max(kC2SearchMin, c0 * (1.0 + 1e-9));
  const auto grid = detail::log_grid(lo, kC2SearchMax, 400);
  std::vector<std::optional<double>> astar(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) astar[k] = detail::a_star_or_none(grid[k], gamma);

  for (double A : A_samples) {
    bool found = false;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      if (!astar[k] || !astar[k + 1]) continue;
      const double f0 = *astar[k] - A, f1 = *astar[k + 1] - A;
      if ((f0 < 0.0) == (f1 < 0.0) && f0 != 0.0) continue;
      auto f = [&](double logc) {
        const auto a = detail::a_star_or_none(std::exp(logc), gamma);
        return a ? *a - A : f0;
      };
      std::uintmax_t iters = 200;
      const auto r = boost::math::tools::bisect(
          f, std::log(grid[k]), std::log(grid[k + 1]),
          [](double a, double b) { return std::abs(b - a) <= 1e-13; }, iters);
      out.points.emplace_back(A, std::exp(0.5 * (r.first + r.second)));
      found = true;
    }
    if (!found) out.gaps.push_back(A);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

/// C2 sampled in C: (A*(C), C) wherever the second critical point exists.
inline BoundaryCurve trace_c2(double gamma, const std::vector<double>& C_samples) {
  BoundaryCurve out;
  out.kind = CurveKind::C2;
  for (double C : C_samples) {
    if (auto a = detail::a_star_or_none(C, gamma))
      out.points.emplace_back(*a, C);
    else
      out.gaps.push_back(C);
  }
  return out;
}

// ---- C3: the larger equilibrium sits on the intersection boundary -------

/// I is linear in C, so for each phi the boundary C is explicit; F is linear
/// in A, so A follows.  Only points where phi is the larger (falling-force)
/// root with A, C > 0 are kept.
inline BoundaryCurve curve_c3(double gamma, int samples = 400) {
  BoundaryCurve out;
  out.kind = CurveKind::C3;
  if (!(gamma > pi / 2) || samples < 1) return out;
  const double lo = 3 * pi / 2 - gamma;
  for (int k = 1; k <= samples; ++k) {
    const double phi = lo + (pi - lo) * k / (samples + 1);
    const double sp = std::sin(phi);
    if (!(sp > 0.0)) continue;
    const double rest = intersection_function(phi, 1.0, gamma) - sp;
    const double C = -rest / sp;
    if (!(C > 0.0)) {
      out.gaps.push_back(phi);
      continue;
    }
    const DimensionlessParams p0(0.0, C, gamma, Mode::Exploratory);
    const double A = total_force(phi, p0) / p0.bond();
    if (!(A > 0.0) || !(dforce_dphi0(phi, p0) < 0.0)) {
      out.gaps.push_back(phi);
      continue;
    }
    out.points.emplace_back(A, C);
  }
  return out;
}

// ---- labeling ------------------------------------------------------------

/// Region code at one parameter point.  Tangent (marginal) roots and roots
/// pinned to phi0 = pi lie on a boundary curve and are not counted, so a
/// boundary point takes the lower count.
inline RegionCode label_point(const DimensionlessParams& p) {
  const EquilibriumSet eq = find_equilibria(p);
  int valid = 0, invalid = 0;
  for (const auto& e : eq.roots) {
    if (e.stability == Stability::MarginalUnstable) continue;
    if (e.phi0_bar >= pi - kPhiTolerance) continue;
    if (validity(e.phi0_bar, p).intersecting)
      ++invalid;
    else
      ++valid;
  }
  if (valid >= 2) return RegionCode::Two;
  if (valid == 1) return invalid > 0 ? RegionCode::OneValidOneInvalid : RegionCode::One;
  return RegionCode::Zero;
}

struct AxisRange {
  double lo;
  double hi;
};

inline constexpr AxisRange kDefaultARange{0.0, 12.0};
inline constexpr AxisRange kDefaultCRange{0.0, 5.0};
inline constexpr int kDefaultResolution = 200;

/// n samples of the half-open window (lo, hi].
inline std::vector<double> region_axis(AxisRange r, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = r.lo + (r.hi - r.lo) * (k + 1) / n;
  return v;
}

inline RegionMap region_map(double gamma, AxisRange a_range = kDefaultARange,
                            AxisRange c_range = kDefaultCRange,
                            int resolution = kDefaultResolution, unsigned threads = 0) {
  if (resolution < 2) throw DomainError("region map resolution must be at least 2");
  if (!(a_range.lo >= 0.0 && a_range.hi > a_range.lo))
    throw DomainError("A range must satisfy 0 <= lo < hi");
  if (!(c_range.lo >= 0.0 && c_range.hi > c_range.lo))
    throw DomainError("C range must satisfy 0 <= lo < hi");
  gamma = detail::snap_angle(gamma);
  if (!(gamma >= 0.0 && gamma <= pi)) throw DomainError("gamma must lie in [0, pi]");

  RegionMap m;
  m.gamma = gamma;
  m.a_axis = region_axis(a_range, resolution);
  m.c_axis = region_axis(c_range, resolution);
  const std::size_t na = m.a_axis.size(), nc = m.c_axis.size();
  m.labels.assign(na * nc, RegionCode::Zero);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(na));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < na; i += threads)
      for (std::size_t j = 0; j < nc; ++j)
        m.labels[i * nc + j] = label_point(DimensionlessParams(m.a_axis[i], m.c_axis[j], gamma));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  const auto in_window = [&](double A, double C) {
    return A > a_range.lo && A <= a_range.hi && C > c_range.lo && C <= c_range.hi;
  };

  BoundaryCurve c1;
  c1.kind = CurveKind::C1;
  c1.analytic = true;
  if (contact_angle_is_extreme(gamma)) {
    if (in_window(pi, m.c_axis.front()))
      for (double C : m.c_axis) c1.points.emplace_back(pi, C);
  } else {
    for (double A : m.a_axis) {
      const auto v = curve_c1(gamma, A);
      if (v.C && in_window(A, *v.C)) c1.points.emplace_back(A, *v.C);
    }
  }
  m.curves.push_back(std::move(c1));

  BoundaryCurve c2 = trace_c2(gamma, m.c_axis);
  std::erase_if(c2.points, [&](const auto& pt) { return !in_window(pt.first, pt.second); });
  m.curves.push_back(std::move(c2));

  BoundaryCurve c3 = curve_c3(gamma, 400);
  std::erase_if(c3.points, [&](const auto& pt) { return !in_window(pt.first, pt.second); });
  m.curves.push_back(std::move(c3));
  return m;
}

}  // namespace floatcyl

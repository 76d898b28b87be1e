#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "floatcyl/equilibria.hpp"
#include "floatcyl/intersection.hpp"

using namespace floatcyl;
using Catch::Matchers::WithinAbs;

TEST_CASE("intersection function equals C times the reach at vertical tangent", "[intersection]") {
  for (double C : {0.3, 1.0, 4.0}) {
    for (double g : {0.0, 0.3, 0.7}) {
      for (double phi0 = 0.0; phi0 <= pi / 2 - g; phi0 += 0.05) {
        const double psi0 = phi0 + g - pi;
        CHECK_THAT(intersection_function(phi0, C, g),
                   WithinAbs(C * meniscus::x(-pi / 2, psi0, phi0, C), 1e-12));
      }
    }
    for (double g : {2.0, 2.6, pi}) {
      for (double phi0 = 3 * pi / 2 - g; phi0 < pi; phi0 += 0.05) {
        const double psi0 = phi0 + g - pi;
        if (std::abs(psi0 - pi) < 1e-9) continue;
        CHECK_THAT(intersection_function(phi0, C, g),
                   WithinAbs(C * meniscus::x(pi / 2, psi0, phi0, C), 1e-12));
      }
    }
  }
}

TEST_CASE("intersection function near a fully turned meniscus", "[intersection]") {
  // phi0 + gamma -> 0+: the value stays finite (about -0.533) but is negative.
  for (double C : {0.1, 1.0, 10.0}) {
    const double v = intersection_function(0.0, C, 1e-6);
    CHECK(v < 0.0);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("flat interface has no intersection value", "[intersection]") {
  CHECK_THROWS_AS(intersection_function(pi / 2, 1.0, pi / 2), FlatInterface);
  CHECK_THROWS_AS(intersection_function(pi / 3, 1.0, 2 * pi / 3), FlatInterface);
  CHECK_THROWS_AS(intersection_function(1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("regime membership", "[intersection]") {
  const auto r1 = validity(0.1, DimensionlessParams(1.0, 5.0, pi / 4));
  CHECK(r1.regime == Regime::PsiNegative);
  REQUIRE(r1.i_value);
  CHECK(r1.intersecting == (*r1.i_value <= 0.0));
  CHECK(r1.conditions.inclination_range);

  const auto r2 = validity(0.5, DimensionlessParams(1.0, 2.0, 3 * pi / 4));
  CHECK(r2.regime == Regime::NotApplicable);
  CHECK(!r2.i_value);
  CHECK(!r2.intersecting);

  const auto r3 = validity(3.0, DimensionlessParams(1.0, 2.0, 3 * pi / 4));
  CHECK(r3.regime == Regime::PsiPositive);
  CHECK(r3.i_value);

  // Closed interval endpoints
  CHECK(intersection_regime(pi / 4, pi / 4) == Regime::PsiNegative);
  CHECK(intersection_regime(3 * pi / 4, 3 * pi / 4) == Regime::PsiPositive);
  CHECK(intersection_regime(pi, pi) == Regime::PsiPositive);
}

TEST_CASE("right contact angle never intersects", "[intersection]") {
  for (double C : {0.1, 1.0, 5.0})
    for (int k = 1; k < 100; ++k) {
      const auto r = validity(pi * k / 100, DimensionlessParams(1.0, C, pi / 2));
      CHECK(r.regime == Regime::NotApplicable);
      CHECK(!r.intersecting);
    }
}

TEST_CASE("reach diagnostic matches the sign of I", "[intersection]") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uC(0.05, 6.0), ug(0.0, pi), ut(0.0, 1.0);
  int checked = 0;
  for (int k = 0; k < 5000; ++k) {
    const double g = ug(rng), C = uC(rng);
    double phi;
    if (g <= pi / 2)
      phi = ut(rng) * (pi / 2 - g);
    else
      phi = 3 * pi / 2 - g + ut(rng) * (g - pi / 2);
    if (std::abs(phi + g - pi) < 1e-6) continue;
    const auto r = validity(phi, DimensionlessParams(1.0, C, g));
    REQUIRE(r.regime != Regime::NotApplicable);
    CHECK(r.conditions.inclination_range);
    REQUIRE(r.i_value);
    if (std::abs(*r.i_value) > 1e-9) {
      CHECK(r.conditions.reach_nonpositive == r.intersecting);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("I decreases along the non-wetting intersection range", "[intersection]") {
  for (int i = 1; i <= 40; ++i)
    for (double C : {0.01, 0.3, 1.0, 3.0, 20.0}) {
      const double g = pi / 2 + (pi / 2) * i / 40;
      const double lo = 3 * pi / 2 - g;
      double prev = INFINITY;
      for (int k = 0; k < 2000; ++k) {
        const double phi = lo + (pi - lo) * k / 2000.0;
        if (std::abs(phi + g - pi) < 1e-12) continue;
        const double v = intersection_function(phi, C, g);
        CHECK(v < prev);
        prev = v;
      }
    }
}

TEST_CASE("quadratic C reconstructions stay outside the intersection region", "[intersection]") {
  // Smallest equilibrium at A = 0 for gamma < pi/2, and the second critical
  // point for gamma > pi/2: the positive root of each quadratic gives I > 0.
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    const double g = (pi / 2) * i / n;  // [0, pi/2)
    for (int j = 1; j <= n; ++j) {
      const double phi = (pi / 2 - g) * j / n;  // (0, pi/2 - gamma]
      const auto q = zero_mass_root_quadratic(phi, g);
      const double C = q.positive_root();
      REQUIRE(C > 0.0);
      CHECK(std::abs(q(C)) < 1e-10 * std::max(1.0, q.w * C * C));
      const DimensionlessParams p0(0.0, C, g, Mode::Exploratory);
      CHECK(std::abs(total_force(phi, p0)) < 1e-9 * std::max(1.0, C * C));
      CHECK(intersection_function(phi, C, g) > 0.0);
    }
  }
  for (int i = 1; i <= n; ++i) {
    const double g = pi / 2 + (pi / 2) * i / n;  // (pi/2, pi]
    const double lo = 3 * pi / 2 - g;
    for (int j = 1; j < n; ++j) {
      const double phi = lo + (pi - lo) * j / n;  // (3pi/2 - gamma, pi)
      const auto q = critical_point_quadratic(phi, g);
      const double C = q.positive_root();
      REQUIRE(C > 0.0);
      CHECK(std::abs(q(C)) < 1e-10 * std::max(1.0, q.w * C * C));
      CHECK(std::abs(dforce_dphi0(phi, DimensionlessParams(1.0, C, g))) < 1e-9 * std::max(1.0, C * C));
      CHECK(intersection_function(phi, C, g) > 0.0);
    }
  }
}

TEST_CASE("equilibria validity sweep", "[intersection]") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> uA(0.01, 12.0), uC(0.02, 8.0), ug(0.0, pi);
  for (int k = 0; k < 10000; ++k) {
    const DimensionlessParams p(uA(rng), uC(rng), ug(rng));
    for (const auto& e : find_equilibria(p).roots) {
      const auto v = validity(e.phi0_bar, p);
      if (p.gamma() <= pi / 2) CHECK(!v.intersecting);
      if (e.stability == Stability::Stable) CHECK(!v.intersecting);
    }
  }
}

TEST_CASE("an unstable equilibrium can intersect", "[intersection]") {
  // gamma = pi, A = pi: F(pi) = 0 and the meniscus at phi0 = pi is turned over.
  const DimensionlessParams p(pi, 1.0, pi);
  const auto eq = find_equilibria(p);
  REQUIRE(!eq.empty());
  const auto& e = eq.roots.back();
  CHECK(e.phi0_bar == pi);
  CHECK(e.stability != Stability::Stable);
  CHECK(validity(e.phi0_bar, p).intersecting);
}

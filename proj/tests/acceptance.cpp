// Acceptance criteria, one PASS/FAIL line each.  Exit status is the number
// of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "floatcyl/floatcyl.hpp"

using namespace floatcyl;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %d %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto eq = find_equilibria(DimensionlessParams(3.8, 2.0, pi / 2));
  const double dt = seconds_since(t0);
  bool ok = eq.size() == 2 && dt < 1.0;
  std::string detail = fmt("count=%zu t=%.3fs", eq.size(), dt);
  if (eq.size() == 2) {
    ok = ok && std::abs(eq[0].phi0_bar - 2.3915) <= 1e-3 && eq[0].stability == Stability::Stable &&
         std::abs(eq[1].phi0_bar - 3.0178) <= 1e-3 && eq[1].stability == Stability::Unstable;
    detail += fmt(" phi1=%.6f (%s) phi2=%.6f (%s)", eq[0].phi0_bar, to_string(eq[0].stability),
                  eq[1].phi0_bar, to_string(eq[1].stability));
  }
  report(1, ok, "two configurations at gamma=pi/2, A=3.8, C=2", detail);
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cm = critical_A_star(1.0, pi / 2);
  const double delta = 1e-4;
  const auto below = find_equilibria(DimensionlessParams(cm.A_star - delta, 1.0, pi / 2)).size();
  const auto above = find_equilibria(DimensionlessParams(cm.A_star + delta, 1.0, pi / 2)).size();
  const double dt = seconds_since(t0);
  const bool value_ok = std::abs(cm.A_star - 5.0893) <= 1e-3;
  const bool ok = value_ok && below == 2 && above == 0 && dt < 1.0;
  report(2, ok, "critical mass A*(C=1, gamma=pi/2) = 5.0893 +- 1e-3",
         fmt("A*=%.6f |A*-5.0893|=%.4f count(A*-1e-4)=%zu count(A*+1e-4)=%zu t=%.3fs", cm.A_star,
             std::abs(cm.A_star - 5.0893), below, above, dt));
}

void criterion3() {
  const PhysicalParams bf{1.2, 1.0, 72.0, 980.0, 1.0 / std::sqrt(pi)};
  const auto p = to_dimensionless(bf, pi / 2);
  const double A = 1.2 * pi, C = std::sqrt(980.0 / 72.0) / std::sqrt(pi);
  const bool conv = std::abs(p.A() - A) <= 1e-12 * A && std::abs(p.C() - C) <= 1e-12 * C;
  const auto eq = find_equilibria(p);
  const bool ok = conv && eq.size() == 2 && eq[0].stability == Stability::Stable &&
                  eq[1].stability != Stability::Stable;
  std::string detail = fmt("A=%.10f C=%.10f count=%zu", p.A(), p.C(), eq.size());
  if (eq.size() == 2)
    detail += fmt(" smaller=%.6f (%s) larger=%.6f (%s)", eq[0].phi0_bar, to_string(eq[0].stability),
                  eq[1].phi0_bar, to_string(eq[1].stability));
  report(3, ok, "physical example converts and has a stable smaller root", detail);
}

// Locate the A at which the equilibrium count changes, between lo and hi.
double count_transition(double C, double lo, double hi) {
  auto count = [&](double A) { return find_equilibria(DimensionlessParams(A, C, pi / 2)).size(); };
  const auto clo = count(lo);
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count(mid) == clo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void criterion4() {
  bool ok = true;
  std::string detail;
  for (double C : {0.5, 1.0, 2.0, 4.0}) {
    const double A1 = 2.0 / (C * C) + pi;
    const auto cm = critical_A_star(C, pi / 2);
    auto eqs = [&](double A) { return find_equilibria(DimensionlessParams(A, C, pi / 2)); };
    const bool counts = eqs(0.5 * A1).size() == 1 && eqs(A1).size() == 2 &&
                        eqs(0.5 * (A1 + cm.A_star)).size() == 2 && eqs(cm.A_star + 0.5).size() == 0;
    const auto at = eqs(cm.A_star);
    const bool marginal = at.size() == 1 && at[0].stability == Stability::MarginalUnstable;
    const double t1 = count_transition(C, A1 - 0.1, A1 + 0.1 * std::min(1.0, cm.A_star - A1));
    const double t2 = count_transition(C, 0.5 * (A1 + cm.A_star), cm.A_star + 0.1);
    const bool hits = std::abs(t1 - A1) <= 1e-6 && std::abs(t2 - cm.A_star) <= 1e-6;
    ok = ok && counts && marginal && hits;
    detail += fmt("C=%g: A1=%.6f hit=%.1e A*=%.6f hit=%.1e marginal=%d; ", C, A1, std::abs(t1 - A1),
                  cm.A_star, std::abs(t2 - cm.A_star), marginal ? 1 : 0);
  }
  report(4, ok, "equilibrium count table at gamma=pi/2", detail);
}

void criterion5() {
  const double A0 = pi + 4.0 * std::sqrt(2.0) / (2.0 + std::sqrt(2.0));
  const double C0 = std::sqrt(2.0 + std::sqrt(2.0)) / 2.0;
  const auto v = curve_c1(pi / 4, A0);
  const bool ok = v.C && std::abs(*v.C - C0) <= 1e-9;
  report(5, ok, "gamma=pi/4 corner (A0, C0) on C1",
         fmt("A0=%.12f C0=%.12f C1(A0)=%.12f", A0, C0, v.C ? *v.C : NAN));
}

void criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> uA(0.01, 12.0), uC(0.1, 5.0), ug(0.0, pi);
  double worst_abs = 0.0, worst_mixed = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto r = energy_force_identity_check(DimensionlessParams(uA(rng), uC(rng), ug(rng)), 200);
    worst_abs = std::max(worst_abs, r.max_abs_err);
    worst_mixed = std::max(worst_mixed, r.max_rel_err);
  }
  report(6, worst_abs < 1e-6, "energy-force identity, 50 random triples x 200 points",
         fmt("max |residual|=%.3e max |residual|/max(1,|F|)=%.3e", worst_abs, worst_mixed));
}

void criterion7() {
  const auto reports = run_oracle_suite(7, 100);
  bool ok = true;
  std::string detail;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    detail += fmt("%s=%s(%.1e) ", r.name.c_str(), r.passed ? "ok" : "BAD", r.max_rel_err);
  }
  report(7, ok, "oracle suite over 100 random parameter sets", detail);
}

void criterion8() {
  auto err = [](double C, AsymptoticRegime reg) {
    return std::abs(asymptotic_A_star(C, pi / 2, reg).A_star - critical_A_star(C, pi / 2).A_star);
  };
  // small C: remainder O(C^2); halving C should divide the error by 4
  bool small_ok = true;
  std::string detail = "small-C ratios:";
  double prev = err(0.2, AsymptoticRegime::SmallC);
  for (double C : {0.1, 0.05, 0.025}) {
    const double e = err(C, AsymptoticRegime::SmallC);
    const double ratio = prev / e;
    small_ok = small_ok && ratio >= 4.0 / 2 && ratio <= 4.0 * 2;
    detail += fmt(" %.3f", ratio);
    prev = e;
  }
  // large C: stated remainder O(C^(-1/2)); doubling C should divide the error by sqrt 2
  bool large_ok = true;
  detail += "; large-C ratios (predicted 1.414):";
  prev = err(8.0, AsymptoticRegime::LargeC);
  double order_sum = 0.0;
  for (double C : {16.0, 32.0, 64.0}) {
    const double e = err(C, AsymptoticRegime::LargeC);
    const double ratio = prev / e;
    large_ok = large_ok && ratio >= std::sqrt(2.0) / 2 && ratio <= std::sqrt(2.0) * 2;
    detail += fmt(" %.3f", ratio);
    order_sum += std::log2(ratio);
    prev = e;
  }
  detail += fmt("; observed large-C order C^-%.2f", order_sum / 3);
  report(8, small_ok && large_ok, "asymptotic series truncation orders at gamma=pi/2", detail);
}

void criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uA(0.01, 12.0), uC(0.02, 8.0), ug(0.0, pi);
  const int n = 10000;
  long wet_bad = 0, stable_bad = 0, roots = 0;
  for (int k = 0; k < n; ++k) {
    const DimensionlessParams p(uA(rng), uC(rng), ug(rng));
    for (const auto& e : find_equilibria(p).roots) {
      ++roots;
      const bool inter = validity(e.phi0_bar, p).intersecting;
      if (p.gamma() <= pi / 2 && inter) ++wet_bad;
      if (p.gamma() > pi / 2 && e.stability == Stability::Stable && inter) ++stable_bad;
    }
  }
  // witness: gamma = pi, A at and just above pi
  bool witness = false;
  std::uniform_real_distribution<double> dA(0.0, 0.5);
  for (int k = 0; k < 200 && !witness; ++k) {
    const double A = k == 0 ? pi : pi + dA(rng);
    const DimensionlessParams p(A, uC(rng), pi);
    for (const auto& e : find_equilibria(p).roots)
      if (e.stability != Stability::Stable && validity(e.phi0_bar, p).intersecting) witness = true;
  }
  const double dt = seconds_since(t0);
  report(9, wet_bad == 0 && stable_bad == 0 && witness && dt < 60.0,
         "validity sweep over 1e4 random triples",
         fmt("triples=%d roots=%ld wetting-intersecting=%ld stable-intersecting=%ld witness=%d t=%.2fs",
             n, roots, wet_bad, stable_bad, witness ? 1 : 0, dt));
}

}  // namespace

int main() {
  const std::function<void()> all[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                        criterion6, criterion7, criterion8, criterion9};
  for (const auto& c : all) c();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}

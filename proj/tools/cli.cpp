#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "floatcyl/floatcyl.hpp"
#include "floatcyl/io.hpp"

namespace floatcyl::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  std::string out_path;
  bool degrees = false;
  bool exploratory = false;
  bool timestamp = false;
};

struct ParamFlags {
  std::optional<double> gamma, A, C;
  std::optional<double> m, rho, sigma, g, a;
};

void add_common(CLI::App* sc, Common& c) {
  sc->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sc->add_option("--out", c.out_path, "write to this file instead of standard output");
  sc->add_flag("--degrees", c.degrees, "angles on the command line are in degrees");
  sc->add_flag("--exploratory", c.exploratory, "allow A <= 0");
  sc->add_flag("--timestamp", c.timestamp, "add a generation timestamp to the metadata");
}

void add_gamma(CLI::App* sc, ParamFlags& f) {
  sc->add_option("--gamma", f.gamma, "contact angle (radians unless --degrees)");
}

void add_params(CLI::App* sc, ParamFlags& f) {
  add_gamma(sc, f);
  sc->add_option("--A", f.A, "mass ratio m / (a^2 rho)");
  sc->add_option("--C", f.C, "radius in capillary lengths, a sqrt(rho g / sigma)");
  sc->add_option("--m", f.m, "mass per unit length");
  sc->add_option("--rho", f.rho, "density difference");
  sc->add_option("--sigma", f.sigma, "surface tension");
  sc->add_option("--g", f.g, "gravitational acceleration");
  sc->add_option("--a", f.a, "cylinder radius");
}

double angle(double v, const Common& c) { return c.degrees ? v * pi / 180.0 : v; }

double require_gamma(const ParamFlags& f, const Common& c) {
  if (!f.gamma) throw UsageError("--gamma is required");
  return detail::snap_angle(angle(*f.gamma, c));
}

Mode mode_of(const Common& c) { return c.exploratory ? Mode::Exploratory : Mode::Standard; }

struct Resolved {
  DimensionlessParams params;
  bool physical;
};

Resolved resolve(const ParamFlags& f, const Common& c, io::Table& t) {
  const double gamma = require_gamma(f, c);
  const bool any_phys = f.m || f.rho || f.sigma || f.g || f.a;
  const bool any_dimless = f.A || f.C;
  if (any_phys && any_dimless)
    throw UsageError("give either --A/--C or the physical set --m --rho --sigma --g --a, not both");
  if (any_phys) {
    if (!(f.m && f.rho && f.sigma && f.g && f.a))
      throw UsageError("physical input needs all of --m --rho --sigma --g --a");
    const PhysicalParams pp{*f.m, *f.rho, *f.sigma, *f.g, *f.a};
    const DimensionlessParams p = to_dimensionless(pp, gamma, mode_of(c));
    t.add_meta("input", std::string("physical"));
    t.add_meta("m", pp.m);
    t.add_meta("rho", pp.rho);
    t.add_meta("sigma", pp.sigma);
    t.add_meta("g", pp.g);
    t.add_meta("a", pp.a);
    t.add_meta("A (derived)", p.A());
    t.add_meta("C (derived)", p.C());
    t.add_meta("gamma_rad", p.gamma());
    return {p, true};
  }
  if (!(f.A && f.C)) throw UsageError("--A and --C are required (or the physical set)");
  const DimensionlessParams p(*f.A, *f.C, gamma, mode_of(c));
  t.add_meta("input", std::string("dimensionless"));
  t.add_meta("A", p.A());
  t.add_meta("C", p.C());
  t.add_meta("gamma_rad", p.gamma());
  return {p, false};
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(io::Table& t, const Common& c, std::ostream& out) {
  if (c.timestamp) t.add_meta("timestamp", utc_now());
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + c.out_path);
    os = &file;
  }
  if (c.format == "json")
    io::write_json(*os, t);
  else
    io::write_csv(*os, t);
}

// ---- subcommands ---------------------------------------------------------

int cmd_equilibria(const ParamFlags& f, const Common& c, std::ostream& out) {
  io::Table t;
  t.command = "equilibria";
  const auto [p, physical] = resolve(f, c, t);
  const EquilibriumSet eq = find_equilibria(p);
  t.add_meta("fallback_used", eq.fallback_used);
  t.add_meta("inconsistent", eq.inconsistent);
  t.rows_key = "equilibria";
  t.columns = {"phi0_bar_rad", "h_over_a", "stability", "valid", "dforce_dphi0_over_sigma",
               "intersection_I"};
  int valid = 0;
  for (const auto& e : eq.roots) {
    const ValidityReport v = validity(e.phi0_bar, p);
    if (!v.intersecting) ++valid;
    t.rows.push_back({e.phi0_bar, e.height, std::string(to_string(e.stability)), !v.intersecting,
                      e.dforce_at_root, v.i_value ? *v.i_value : NAN});
  }
  emit(t, c, out);
  return valid > 0 ? kOk : kNoValidEquilibrium;
}

int cmd_curves(const ParamFlags& f, const Common& c, int samples, std::ostream& out) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  io::Table t;
  t.command = "curves";
  const auto [p, physical] = resolve(f, c, t);
  t.columns = {"phi0_rad", "force_over_sigma", "energy_over_sigma_a", "h_over_a"};
  for (int k = 0; k < samples; ++k) {
    const double phi = k == samples - 1 ? pi : pi * k / (samples - 1);
    t.rows.push_back({phi, total_force(phi, p), total_energy(phi, p).e_total, height(phi, p)});
  }
  emit(t, c, out);
  return kOk;
}

int cmd_profile(const ParamFlags& f, const Common& c, std::optional<double> phi0, int samples,
                double cutoff, std::ostream& out) {
  if (!phi0) throw UsageError("--phi0 is required");
  if (samples < 2) throw UsageError("--samples must be at least 2");
  io::Table t;
  t.command = "profile";
  const auto [p, physical] = resolve(f, c, t);
  const double phi = detail::snap_angle(angle(*phi0, c));
  const InterfaceProfile prof = interface_profile(phi, p, static_cast<std::size_t>(samples), cutoff);
  t.add_meta("phi0_rad", phi);
  t.add_meta("psi0_rad", prof.psi0);
  t.add_meta("flat", prof.flat);
  t.add_meta("psi_cutoff_rad", cutoff);
  t.add_meta("contact_x_over_a", prof.contact_x);
  t.add_meta("contact_u_over_a", prof.contact_u);
  t.columns = {"psi_rad", "x_over_a", "u_over_a"};
  for (const auto& s : prof.samples) t.rows.push_back({s.psi, s.x, s.u});
  emit(t, c, out);
  return kOk;
}

struct MapFlags {
  double a_min = kDefaultARange.lo, a_max = kDefaultARange.hi;
  double c_min = kDefaultCRange.lo, c_max = kDefaultCRange.hi;
  int resolution = kDefaultResolution;
  unsigned threads = 0;
};

int cmd_region_map(const ParamFlags& f, const Common& c, const MapFlags& mf, std::ostream& out) {
  if (mf.resolution < 2) throw UsageError("--resolution must be at least 2");
  io::Table t;
  t.command = "region-map";
  const double gamma = require_gamma(f, c);
  const RegionMap m =
      region_map(gamma, {mf.a_min, mf.a_max}, {mf.c_min, mf.c_max}, mf.resolution, mf.threads);
  t.add_meta("gamma_rad", m.gamma);
  t.add_meta("A_window", "(" + io::format_number(mf.a_min) + ", " + io::format_number(mf.a_max) + "]");
  t.add_meta("C_window", "(" + io::format_number(mf.c_min) + ", " + io::format_number(mf.c_max) + "]");
  t.add_meta("resolution", static_cast<long long>(mf.resolution));
  t.rows_key = "cells";
  t.columns = {"A", "C", "label"};
  for (std::size_t i = 0; i < m.a_axis.size(); ++i)
    for (std::size_t j = 0; j < m.c_axis.size(); ++j)
      t.rows.push_back({m.a_axis[i], m.c_axis[j], std::string(to_string(m.at(i, j)))});

  t.extra["a_axis"] = m.a_axis;
  t.extra["c_axis"] = m.c_axis;
  auto& curves = t.extra["curves"] = nlohmann::ordered_json::array();
  for (const auto& bc : m.curves) {
    nlohmann::ordered_json jc;
    jc["kind"] = to_string(bc.kind);
    jc["analytic"] = bc.analytic;
    auto& pts = jc["points"] = nlohmann::ordered_json::array();
    for (const auto& [A, C] : bc.points) pts.push_back({A, C});
    curves.push_back(std::move(jc));
  }
  emit(t, c, out);
  return kOk;
}

int cmd_astar(const ParamFlags& f, const Common& c, std::optional<double> C, std::ostream& out) {
  if (!C) throw UsageError("--C is required");
  io::Table t;
  t.command = "astar";
  const double gamma = require_gamma(f, c);
  const CriticalMass num = critical_A_star(*C, gamma);
  t.add_meta("C", *C);
  t.add_meta("gamma_rad", gamma);
  t.columns = {"method", "A_star", "phi0_star_rad"};
  t.rows.push_back({std::string("numeric"), num.A_star, num.phi0_star});
  if (std::abs(gamma - pi / 2) <= 1e-12) {
    const auto s = asymptotic_A_star(*C, gamma, AsymptoticRegime::SmallC);
    const auto l = asymptotic_A_star(*C, gamma, AsymptoticRegime::LargeC);
    t.rows.push_back({std::string("series_small_C"), s.A_star, s.phi0_star});
    t.rows.push_back({std::string("series_large_C"), l.A_star, l.phi0_star});
  }
  emit(t, c, out);
  return kOk;
}

int cmd_verify(const Common& c, unsigned long long seed, int sets, std::ostream& out) {
  if (sets < 1) throw UsageError("--sets must be positive");
  io::Table t;
  t.command = "verify";
  t.add_meta("seed", static_cast<long long>(seed));
  t.add_meta("sets", static_cast<long long>(sets));
  t.rows_key = "checks";
  t.columns = {"check", "passed", "max_abs_err", "max_rel_err", "samples", "tolerance"};
  bool all = true;
  for (const auto& r : run_oracle_suite(seed, sets)) {
    all = all && r.passed;
    t.rows.push_back({r.name, r.passed, r.max_abs_err, r.max_rel_err,
                      static_cast<long long>(r.samples), r.tolerance});
  }
  t.add_meta("all_passed", all);
  emit(t, c, out);
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of a horizontal cylinder floating on a liquid surface", "floatcyl"};
  app.require_subcommand(1);

  Common common;
  ParamFlags flags;

  auto* eq = app.add_subcommand("equilibria", "force-balance points with stability and validity");
  add_common(eq, common);
  add_params(eq, flags);

  int curve_samples = 201;
  auto* curves = app.add_subcommand("curves", "force, energy and height against the wetting angle");
  add_common(curves, common);
  add_params(curves, flags);
  curves->add_option("--samples", curve_samples, "grid points on [0, pi]")->capture_default_str();

  std::optional<double> phi0;
  int profile_samples = 200;
  double psi_cutoff = kDefaultPsiCutoff;
  auto* profile = app.add_subcommand("profile", "meniscus shape for one wetting angle");
  add_common(profile, common);
  add_params(profile, flags);
  profile->add_option("--phi0", phi0, "wetting angle (radians unless --degrees)");
  profile->add_option("--samples", profile_samples, "number of samples")->capture_default_str();
  profile->add_option("--psi-cutoff", psi_cutoff, "stop the profile at this |psi|")
      ->capture_default_str();

  MapFlags mf;
  auto* rmap = app.add_subcommand("region-map", "classify the (A, C) plane at fixed gamma");
  add_common(rmap, common);
  add_gamma(rmap, flags);
  rmap->add_option("--a-min", mf.a_min, "lower (open) end of the A window")->capture_default_str();
  rmap->add_option("--a-max", mf.a_max, "upper end of the A window")->capture_default_str();
  rmap->add_option("--c-min", mf.c_min, "lower (open) end of the C window")->capture_default_str();
  rmap->add_option("--c-max", mf.c_max, "upper end of the C window")->capture_default_str();
  rmap->add_option("--resolution", mf.resolution, "samples per axis")->capture_default_str();
  rmap->add_option("--threads", mf.threads, "worker threads (0 = hardware)");

  std::optional<double> astar_C;
  auto* astar = app.add_subcommand("astar", "critical mass ratio and its asymptotic series");
  add_common(astar, common);
  add_gamma(astar, flags);
  astar->add_option("--C", astar_C, "radius in capillary lengths");

  unsigned long long seed = 20240601;
  int sets = 100;
  auto* verify = app.add_subcommand("verify", "run the oracle suite");
  add_common(verify, common);
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--sets", sets, "random parameter sets")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eq) return cmd_equilibria(flags, common, out);
    if (*curves) return cmd_curves(flags, common, curve_samples, out);
    if (*profile) return cmd_profile(flags, common, phi0, profile_samples, psi_cutoff, out);
    if (*rmap) return cmd_region_map(flags, common, mf, out);
    if (*astar) return cmd_astar(flags, common, astar_C, out);
    if (*verify) return cmd_verify(common, seed, sets, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kRegimeOrDomain;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << '\n';
    return kRegimeOrDomain;
  } catch (const OracleFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace floatcyl::cli

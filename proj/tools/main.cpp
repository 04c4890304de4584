#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "report.hpp"
#include "trigonal/verify.hpp"

namespace {

using namespace trigonal;
using io::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string b1 = "2";
  std::string b2 = "3";
  std::string s = "0.1";
  std::optional<double> tol;
  std::optional<int> order;
  std::optional<double> theta0;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 7;
};

FamilyParams family(const Common& c) {
  FamilyParams p{io::parse_complex(c.b1), io::parse_complex(c.b2), io::parse_complex(c.s)};
  p.validate();
  return p;
}

PeriodOptions period_options(const Common& c) {
  PeriodOptions o;
  if (c.tol) o.quad.tol = *c.tol;
  if (c.order) o.quad.panel_order = *c.order;
  if (c.theta0) o.geometry.theta0 = *c.theta0;
  o.quad.validate();
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw NumericError(ErrorCode::InvalidParam, "cannot open output file: " + c.out);
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_periods(const Common& c) {
  const PeriodData pd = compute_periods(family(c), period_options(c));
  emit(c, c.format == "csv" ? io::periods_csv(pd) : dump(io::to_json(pd)));
  return kExitPass;
}

int cmd_eval(const Common& c, const std::string& u_text, const std::string& function, int branch, int sheet_class) {
  const SigmaContext ctx(compute_periods(family(c), period_options(c)));
  const CVec u = io::parse_vector(u_text);
  if (u.size() != ctx.genus()) {
    throw NumericError(ErrorCode::InvalidParam, "--u needs " + std::to_string(ctx.genus()) + " entries");
  }
  cplx value;
  if (function == "sigma") {
    value = ctx(u);
  } else if (function == "theta") {
    value = ctx.theta_fn().value(CVec(ctx.normalizer() * u));
  } else {
    if (ctx.genus() != 3) throw NumericError(ErrorCode::InvalidParam, "al is evaluated in genus 3 only");
    value = al(ctx, make_al_context(ctx, branch, sheet_class), u);
  }
  const PeriodData& pd = ctx.periods();
  ordered_json diag = {{"legendre_defect", static_cast<double>(pd.diag.legendre_defect)},
                       {"characteristic", {{"a", io::to_json(pd.delta.a)}, {"b", io::to_json(pd.delta.b)}}},
                       {"normalization_constant", io::to_json(ctx.c())}};
  ordered_json doc = {{"function", function},
                      {"u", io::to_json(u)},
                      {function + "_re", static_cast<double>(value.real())},
                      {function + "_im", static_cast<double>(value.imag())},
                      {"genus", ctx.genus()},
                      {"diagnostics", diag}};
  if (c.format == "csv") {
    emit(c, "function,re,im\n" + function + "," + ordered_json(static_cast<double>(value.real())).dump() + "," +
                ordered_json(static_cast<double>(value.imag())).dump() + "\n");
  } else {
    emit(c, dump(doc));
  }
  return kExitPass;
}

int cmd_verify(const Common& c, const std::string& suite, const std::optional<std::string>& elliptic_s,
               bool s_given) {
  VerifyOptions o;
  o.params = family(c);
  if (o.params.genus() != 3) throw NumericError(ErrorCode::InvalidParam, "verify needs s != 0");
  o.periods = period_options(c);
  o.seed = c.seed;
  if (elliptic_s) {
    o.elliptic_s = io::parse_complex(*elliptic_s);
  } else if (s_given) {
    o.elliptic_s = o.params.s;
  }
  const CheckList rows = run_suites(suite, o);
  emit(c, c.format == "csv" ? io::checks_csv(rows) : dump(io::to_json(rows)));
  return all_pass(rows) ? kExitPass : kExitFail;
}

int cmd_elliptic(const Common& c, const std::string& s_text) {
  const EllipticContext e(io::parse_complex(s_text));
  VerifyOptions o;
  o.elliptic_s = e.s();
  o.seed = c.seed;
  const CheckList rows = verify_elliptic(o);
  if (c.format == "csv") {
    emit(c, io::checks_csv(rows));
  } else {
    ordered_json doc = {{"s", io::to_json(e.s())},
                        {"g3", io::to_json(e.g3())},
                        {"omega_p", io::to_json(e.omega_p())},
                        {"omega_pp", io::to_json(e.omega_pp())},
                        {"eta_p", io::to_json(e.eta_p())},
                        {"eta_pp", io::to_json(e.eta_pp())},
                        {"omega_s", io::to_json(e.omega_s())},
                        {"omega_0", io::to_json(e.omega_0())},
                        {"sigma_omega_s", io::to_json(e.sigma(e.omega_s()))},
                        {"checks", io::to_json(rows)}};
    emit(c, dump(doc));
  }
  return all_pass(rows) ? kExitPass : kExitFail;
}

struct SweepArgs {
  std::optional<std::string> grid;
  std::string observable = "all";
  bool main_theorem = false;
  std::optional<std::string> x1, x2;
  int sheet1 = 0, sheet2 = 0;
};

int cmd_sweep(const Common& c, const SweepArgs& a) {
  const FamilyParams p = family(c);
  const std::vector<cplx> grid = a.grid ? io::parse_grid(*a.grid) : default_s_grid();
  if (grid.empty()) throw NumericError(ErrorCode::InvalidParam, "empty grid");
  const PeriodOptions opts = period_options(c);

  if (a.main_theorem) {
    std::vector<SectionPair> points;
    if (a.x1 || a.x2) {
      if (!a.x1 || !a.x2) throw NumericError(ErrorCode::InvalidParam, "--x1 and --x2 go together");
      points.push_back({SectionPoint{io::parse_complex(*a.x1), a.sheet1}, SectionPoint{io::parse_complex(*a.x2), a.sheet2}});
    } else {
      points = default_section_points();
    }
    ordered_json rows = ordered_json::array();
    bool ok = true;
    std::string csv = "x1_re,x1_im,x2_re,x2_im,s_re,s_im,ratio_re,ratio_im\n";
    for (const auto& pair : points) {
      const MainTheoremPoint m = main_theorem_check(p.b1, p.b2, pair[0], pair[1], grid, opts);
      ordered_json row = io::to_json(m);
      ok = ok && row["pass"].get<bool>();
      rows.push_back(row);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        auto n = [](real v) { return ordered_json(static_cast<double>(v)).dump(); };
        csv += n(m.p1.x.real()) + "," + n(m.p1.x.imag()) + "," + n(m.p2.x.real()) + "," + n(m.p2.x.imag()) + "," +
               n(grid[i].real()) + "," + n(grid[i].imag()) + "," + n(m.ratios[i].real()) + "," +
               n(m.ratios[i].imag()) + "\n";
      }
    }
    emit(c, c.format == "csv" ? csv : dump(rows));
    return ok ? kExitPass : kExitFail;
  }

  std::vector<DegenerationReport> reports = period_scalings(p.b1, p.b2, grid, opts);
  for (auto& r : limit_compare_periods(p.b1, p.b2, grid, opts)) reports.push_back(std::move(r));
  reports.push_back(limit_riemann_constant(p.b1, p.b2, grid, opts).defect);
  if (a.observable != "all") {
    std::vector<DegenerationReport> picked;
    for (auto& r : reports)
      if (io::observable_key(r.observable) == a.observable) picked.push_back(std::move(r));
    if (picked.empty()) {
      std::string known;
      for (const auto& r : reports) known += (known.empty() ? "" : ", ") + io::observable_key(r.observable);
      throw NumericError(ErrorCode::InvalidParam, "unknown observable '" + a.observable + "'; known: " + known);
    }
    reports = std::move(picked);
  }
  if (c.format == "csv") {
    emit(c, io::reports_csv(reports));
  } else {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) out.push_back(io::to_json(r));
    emit(c, dump(out));
  }
  return kExitPass;
}

void add_common(CLI::App* sub, Common& c, bool with_family) {
  if (with_family) {
    sub->add_option("--b1", c.b1, "branch point b1 (\"re,im\" or real)");
    sub->add_option("--b2", c.b2, "branch point b2 (\"re,im\" or real)");
  }
  sub->add_option("--tol", c.tol, "quadrature tolerance");
  sub->add_option("--order", c.order, "Gauss-Legendre panel order");
  sub->add_option("--theta0", c.theta0, "argument of the base point");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--seed", c.seed, "seed for randomized suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods, theta, sigma and al functions of the trigonal family y^3 = x(x-s)(x-b1)(x-b2)"};
  app.require_subcommand(1);
  Common c;

  auto* periods = app.add_subcommand("periods", "half periods, tau and diagnostics");
  add_common(periods, c, true);
  periods->add_option("--s", c.s, "degeneration parameter (0 selects the genus-2 normalization)");

  std::string u_text, function = "sigma";
  int branch = 0, sheet_class = 0;
  auto* eval = app.add_subcommand("eval", "evaluate sigma, theta or al at u");
  add_common(eval, c, true);
  eval->add_option("--s", c.s, "degeneration parameter");
  eval->add_option("--u", u_text, "point as \"re,im;re,im;...\"")->required();
  eval->add_option("--function", function, "function")->check(CLI::IsMember({"sigma", "theta", "al"}));
  eval->add_option("--branch", branch, "al: branch point index 0..3")->check(CLI::Range(0, 3));
  eval->add_option("--class", sheet_class, "al: sheet class 0..2")->check(CLI::Range(0, 2));

  std::string suite = "all";
  std::optional<std::string> elliptic_s;
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify, c, true);
  auto* s_opt = verify->add_option("--s", c.s, "degeneration parameter (also the elliptic s unless --elliptic-s)");
  verify->add_option("--elliptic-s", elliptic_s, "s of the elliptic model");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite")->check(CLI::IsMember(suites));

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "degeneration sweeps over an s grid");
  add_common(sweep, c, true);
  sweep->add_option("--grid", sw.grid, "comma-separated s values, decreasing");
  sweep->add_option("--observable", sw.observable, "observable key or 'all'");
  sweep->add_flag("--main-theorem", sw.main_theorem, "compare scaled genus-3 sigma with genus-2 sigma");
  sweep->add_option("--x1", sw.x1, "x of the first section point");
  sweep->add_option("--x2", sw.x2, "x of the second section point");
  sweep->add_option("--sheet1", sw.sheet1, "sheet of the first point")->check(CLI::Range(0, 2));
  sweep->add_option("--sheet2", sw.sheet2, "sheet of the second point")->check(CLI::Range(0, 2));

  auto* elliptic = app.add_subcommand("elliptic", "constants and identities of y(y - s) = x^3");
  add_common(elliptic, c, false);
  std::string elliptic_s_text = "0.01";
  elliptic->add_option("--s", elliptic_s_text, "parameter s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*periods) return cmd_periods(c);
    if (*eval) return cmd_eval(c, u_text, function, branch, sheet_class);
    if (*verify) return cmd_verify(c, suite, elliptic_s, s_opt->count() > 0);
    if (*sweep) return cmd_sweep(c, sw);
    if (*elliptic) return cmd_elliptic(c, elliptic_s_text);
  } catch (const NumericError& e) {
    std::cout << io::error_json(to_string(e.code()), e.what()).dump(2) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << io::error_json("Internal", e.what()).dump(2) << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "ltcert/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "ltcert/parallel.hpp"
#include "ltcert/profile.hpp"
#include "ltcert/sphere_series.hpp"
#include "ltcert/torus_series.hpp"

namespace ltcert {

namespace {

using Json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

Json number_to_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::runtime_error("report: expected a number, got '" + s + "'");
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, i / double(count - 1)));
  return out;
}

// k * step for k = 1..floor(hi / step), computed by multiplication to avoid drift
std::vector<double> arithmetic_grid(double start, double step, double hi) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((hi - start) / step + 1e-9));
  for (long k = 0; k <= n; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

std::string emit_report(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["config"] = Json::object();
  for (const auto& [k, v] : report.config) j["config"][k] = v;
  j["pass"] = report.pass();
  j["records"] = Json::array();
  for (const auto& r : report.records) {
    j["records"].push_back({{"name", r.name},
                            {"claim", r.claim},
                            {"computed", number_to_json(r.computed)},
                            {"bound", number_to_json(r.bound)},
                            {"margin", number_to_json(r.margin)},
                            {"pass", r.pass},
                            {"notes", r.notes}});
  }
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
    Report out;
    out.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("config").items()) out.config[k] = v.get<std::string>();
    for (const auto& r : j.at("records")) {
      VerificationRecord rec;
      rec.name = r.at("name").get<std::string>();
      rec.claim = r.at("claim").get<std::string>();
      rec.computed = number_from_json(r.at("computed"));
      rec.bound = number_from_json(r.at("bound"));
      rec.margin = number_from_json(r.at("margin"));
      rec.pass = r.at("pass").get<bool>();
      rec.notes = r.value("notes", std::string{});
      out.records.push_back(std::move(rec));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

void print_records(std::ostream& out, const RecordSet& records) {
  std::size_t width = 4;
  for (const auto& r : records) width = std::max(width, r.name.size());
  out << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(width) + 2) << "name" << std::setw(24)
      << "computed" << std::setw(24) << "bound"
      << "margin\n";
  for (const auto& r : records) {
    out << std::left << std::setw(8) << (r.pass ? "PASS" : "FAIL") << std::setw(static_cast<int>(width) + 2) << r.name
        << std::setw(24) << format_number(r.computed) << std::setw(24) << format_number(r.bound)
        << format_number(r.margin) << "\n";
  }
}

std::string csv_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

RecordSet verify_sphere(const RunConfig& c) {
  RecordSet out = certify_below_one_sphere(c.a_max_sphere, c.step, c.threads).records();

  double worst = 0.0;
  double worst_imag = 0.0;
  for (double a : log_spaced(0.1, 100.0, 20)) {
    const auto closed = h_s2_closed_form(a);
    worst = std::max(worst, std::fabs(closed.value - h_s2_direct(a, 1e-15).value));
    worst_imag = std::max(worst_imag, closed.imag_residue);
  }
  out.push_back(agreement_record("H_S2 closed form = direct sum", "digamma/trigamma closed form equals the series",
                                 worst, 0.0, 1e-10,
                                 "20 log-spaced a in [0.1, 100]; computed is the largest |closed - direct|; largest "
                                 "imaginary residue " +
                                     format_number(worst_imag)));

  const double a100[] = {100.0};
  const RemainderPoint p = remainder_curve(a100).front();
  out.push_back(agreement_record("H_S2 third-order remainder at a = 100",
                                 "(H_S2(a) - 1 + 8/(3 pi a)) a^3 -> -64/(315 pi)", p.remainder_scaled,
                                 kSphereRemainderLimit, 5e-3,
                                 "computed with the + sign on 8/(3 pi a), the sign that makes the limit exist"));

  append(out, chi_bound_check(log_spaced(0.1, 1000.0, 25)));
  return out;
}

RecordSet verify_torus(const RunConfig& c) {
  RecordSet out = certify_below_one_torus(c.a_max_torus, c.step, c.threads).records();

  const RemainderEstimate r20 = poisson_remainder(20.0);
  out.push_back(upper_bound_record("Poisson remainder at a = 20", "|R(20)| < 5e-3", std::fabs(r20.R), 5e-3,
                                   "R(20) = " + format_number(r20.R)));

  const double opt = envelope_crossing(optimistic_envelope);
  out.push_back(agreement_record("optimistic envelope threshold", "(64/pi) exp(-pi sqrt(a)/4) = 1 at a = 14.73", opt,
                                 14.73, 0.1,
                                 "closed form [(4/pi) log(64/pi)]^2 = " +
                                     format_number(optimistic_threshold_closed_form())));
  const double cons = envelope_crossing(conservative_envelope);
  out.push_back(agreement_record("conservative envelope threshold",
                                 "(2^{3/2} b/alpha^2) exp(-alpha pi sqrt(a)/2) = 1 at a = 273.8", cons, 273.8, 0.5,
                                 "closed form " + format_number(conservative_threshold_closed_form())));

  const std::vector<double> xis = arithmetic_grid(0.5, 0.5, 60.0);
  const std::vector<double> scaled = parallel_map<double>(
      xis.size(),
      [&](std::size_t i) {
        const double bound = std::exp(-0.5 * xis[i]);
        return std::fabs(hankel_hhat(xis[i], 1e-3 * bound)) / bound;
      },
      c.threads);
  const auto worst = std::max_element(scaled.begin(), scaled.end());
  out.push_back(upper_bound_record("radial transform bound", "|h^(xi)| < exp(-xi/2) for xi in {0.5, 1, ..., 60}",
                                   *worst, 1.0,
                                   "computed is max |h^(xi)| exp(xi/2), attained at xi = " +
                                       format_number(xis[static_cast<std::size_t>(worst - scaled.begin())]) +
                                       "; quadrature tolerance 1e-3 exp(-xi/2)"));

  append(out, strip_inequality_check().records());
  out.push_back(tail_chain_check(1.0));
  out.push_back(tail_chain_check(5.0));

  double dev = 0.0;
  const LatticeShellTable table(shell_cutoff(20.0 * 20.0 * 20.0 * 20.0, 1e-12));
  for (double a : {2.0, 5.0, 10.0, 20.0})
    dev = std::max(dev, std::fabs(poisson_remainder_spectral(a, table, 1e-11) - poisson_remainder(a, table).R));
  out.push_back(agreement_record("Poisson remainder, lattice side = transform side",
                                 "sum ((|k|^2/a)^2+1)^{-2} + 1 - pi^2 a/4 = 2 pi a sum h^(2 pi sqrt(a) |k|)", dev, 0.0,
                                 1e-9, "a in {2, 5, 10, 20}; computed is the largest deviation"));
  return out;
}

RecordSet verify_profile(const RunConfig&) {
  const BudgetProfile f = BudgetProfile::normalized();
  RecordSet out;
  const CrossChecked norm = normalization_residual(f);
  out.push_back(agreement_record("profile normalization", "int_0^inf f(t)^2 dt = 1 for mu = pi^2/16", norm.quadrature,
                                 0.0, 1e-12, "closed-form residual " + format_number(norm.closed_form)));
  const CrossChecked obj = objective_value(f);
  out.push_back(agreement_record("profile objective", "pi int_0^inf (1 - f)^2 t^{-2} dt = pi^3/16", obj.quadrature,
                                 std::pow(kPi, 3) / 16.0, 1e-10, "closed form " + format_number(obj.closed_form)));
  out.push_back(agreement_record("induced constant", "6 A = 3 pi/32 with A = pi/64", 6.0 * induced_A(f),
                                 3.0 * kPi / 32.0, 1e-15));
  out.push_back(agreement_record("normalizing parameter", "the mu with int f^2 = 1 is pi^2/16", normalizing_mu(),
                                 kPi * kPi / 16.0, 1e-10, "bisection on the quadrature residual"));
  out.push_back(agreement_record("positive-part integral", "int_0^inf (sqrt(rho) - sqrt(A E))_+^2 dE = rho^2/(6A)",
                                 integral_identity_check(1.0, kPi / 64.0), 0.0, 1e-10,
                                 "rho = 1, A = pi/64; computed is the relative deviation"));
  return out;
}

RecordSet verify_empirical(const RunConfig& c) {
  RecordSet out;
  const auto seq = semiclassical_sequence(c.n_max, c.threads);
  double dev = 0.0;
  double max_ratio = 0.0;
  double min_increment = std::numeric_limits<double>::infinity();
  double gap_dev = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    dev = std::max(dev, std::fabs(seq[i].ratio - seq[i].closed_form));
    max_ratio = std::max(max_ratio, seq[i].ratio);
    if (i > 0) min_increment = std::min(min_increment, seq[i].ratio - seq[i - 1].ratio);
    gap_dev = std::max(gap_dev, std::fabs(seq[i].gap - 1.0 / (2.0 * kPi * seq[i].N * seq[i].N)));
  }
  const std::string range = "N = 2.." + std::to_string(c.n_max);
  out.push_back(agreement_record("semiclassical ratios", "ratio(N) = (N^2 - 1)/(2 pi N^2)", dev, 0.0, 1e-10,
                                 range + "; largest gap deviation from 1/(2 pi N^2): " + format_number(gap_dev)));
  out.push_back(upper_bound_record("semiclassical ratios below 3 pi/32", "ratio(N) < 3 pi/32", max_ratio,
                                   3.0 * kPi / 32.0, range));
  if (seq.size() > 1) {
    out.push_back(make_record("semiclassical ratios increasing", "ratio(N) increases with N", min_increment, 0.0,
                              min_increment, range + "; computed is the smallest increment"));
  }

  const LtReport torus = lt_ratio(build_family(TorusSpec{{}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}));
  out.push_back(agreement_record("square torus four-mode ratio", "ratio = 1/pi^2", torus.ratio, 1.0 / (kPi * kPi),
                                 1e-12, "bound " + format_number(torus.bound)));

  for (double alpha : {1.0, 0.5, 0.1, 0.01}) {
    const ElongatedReport e = elongated_ratio(alpha);
    out.push_back(agreement_record("elongated torus ratio, alpha = " + format_number(alpha),
                                   "ratio = 3/(8 pi^2 alpha)", e.report.ratio, e.closed_form, 1e-10,
                                   "quadrature of the raw norms gives " + format_number(e.quadrature_ratio)));
    out.push_back(upper_bound_record("elongated torus bound, alpha = " + format_number(alpha),
                                     "ratio <= (1/alpha) 3 pi/32", e.report.ratio, e.report.bound));
  }
  out.push_back(periodic_lift_check(build_family(TorusSpec{TorusDomain::elongated(0.5),
                                                           {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 1}}}))
                    .record);

  const int n_vec = std::min(c.n_max, 8);
  const LtReport scalar = lt_ratio(build_family(SphereScalarSpec{n_vec}));
  const LtReport w = lt_ratio(build_family(SphereWSpec{n_vec}));
  const LtReport v = lt_ratio(build_family(SphereVSpec{n_vec}));
  const LtReport mixed = lt_ratio(build_family(SphereMixedSpec{n_vec}));
  out.push_back(upper_bound_record("divergence-free family bound", "ratio <= 3 pi/32", w.ratio, w.bound, w.family));
  out.push_back(upper_bound_record("curl-free family bound", "ratio <= 3 pi/32", v.ratio, v.bound, v.family));
  out.push_back(upper_bound_record("mixed vector family bound", "ratio <= 3 pi/16", mixed.ratio, mixed.bound,
                                   mixed.family));
  out.push_back(agreement_record("scalar and divergence-free ratios agree", "equal densities give equal ratios",
                                 w.ratio, scalar.ratio, 1e-10, scalar.family + " vs " + w.family));

  append(out, addition_theorem_check());
  const double energies[] = {1.0, 5.0, 20.0};
  append(out, pipeline_consistency(build_family(SphereScalarSpec{3}), energies));
  return out;
}

RecordSet verify_target(const std::string& target, const RunConfig& config) {
  if (target == "sphere") return verify_sphere(config);
  if (target == "torus") return verify_torus(config);
  if (target == "profile") return verify_profile(config);
  if (target == "all") {
    RecordSet out = verify_profile(config);
    append(out, verify_sphere(config));
    append(out, verify_torus(config));
    append(out, verify_empirical(config));
    return out;
  }
  throw ConfigError("unknown verify target '" + target + "'");
}

std::string figure1_csv(const RunConfig& c) {
  const std::vector<double> grid = arithmetic_grid(1.0, c.fig_step, c.fig_a_max);
  const std::vector<double> h = parallel_map<double>(
      grid.size(), [&](std::size_t i) { return h_s2_direct(grid[i], c.tol).value; }, c.threads);
  std::string s = "# remainder_limit=" + csv_number(kSphereRemainderLimit) + " H_bound=1\n";
  s += "a,H_S2,remainder_scaled\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = grid[i];
    s += csv_number(a) + "," + csv_number(h[i]) + "," + csv_number((h[i] - 1.0 + 8.0 / (3.0 * kPi * a)) * a * a * a) +
         "\n";
  }
  return s;
}

std::string figure2_csv(const RunConfig& c) {
  const std::vector<double> grid = arithmetic_grid(c.fig_step, c.fig_step, c.a_max_torus);
  const double a_top = grid.empty() ? c.fig_step : grid.back();
  const LatticeShellTable table(std::max(shell_cutoff(4.0 / (kPi * kPi) * a_top * a_top * a_top, c.tol),
                                         shell_cutoff(a_top * a_top * a_top * a_top, c.tol)));
  struct Row {
    double h, r;
  };
  const std::vector<Row> rows = parallel_map<Row>(
      grid.size(),
      [&](std::size_t i) {
        return Row{h_t2_direct(grid[i], c.tol, table).value, poisson_remainder(grid[i], table, c.tol).R};
      },
      c.threads);
  std::string s = "# H_bound=1 remainder_limit=0\n";
  s += "a,H_T2,R\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    s += csv_number(grid[i]) + "," + csv_number(rows[i].h) + "," + csv_number(rows[i].r) + "\n";
  return s;
}

std::vector<LtReport> empirical_reports(const std::string& domain, const RunConfig& c) {
  std::vector<LtReport> out;
  if (domain == "sphere") {
    const auto families = parallel_map<LtReport>(
        static_cast<std::size_t>(c.n_max - 1),
        [](std::size_t i) { return lt_ratio(build_family(SphereScalarSpec{static_cast<int>(i) + 2})); }, c.threads);
    return families;
  }
  if (domain == "torus") {
    out.push_back(lt_ratio(build_family(TorusSpec{{}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}})));
    for (int radius2 : {2, 5, 10}) {
      std::vector<TorusMode> modes;
      for (int k1 = -4; k1 <= 4; ++k1)
        for (int k2 = -4; k2 <= 4; ++k2)
          if ((k1 != 0 || k2 != 0) && k1 * k1 + k2 * k2 <= radius2) modes.push_back({k1, k2});
      out.push_back(lt_ratio(build_family(TorusSpec{{}, modes})));
    }
    return out;
  }
  if (domain == "elongated") {
    out.push_back(elongated_ratio(c.alpha).report);
    return out;
  }
  throw ConfigError("unknown empirical domain '" + domain + "'");
}

std::string lt_reports_csv(const std::vector<LtReport>& reports) {
  std::string s = "family,members,rho_integral,rho_sq_integral,dirichlet_sum,ratio,bound,margin,gram_residual\n";
  for (const auto& r : reports) {
    s += "\"" + r.family + "\"," + std::to_string(r.members) + "," + csv_number(r.rho_integral) + "," +
         csv_number(r.rho_sq_integral) + "," + csv_number(r.dirichlet_sum) + "," + csv_number(r.ratio) + "," +
         csv_number(r.bound) + "," + csv_number(r.margin) + "," + csv_number(r.gram_residual) + "\n";
  }
  return s;
}

std::string lt_reports_json(const std::vector<LtReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) {
    j.push_back({{"family", r.family},
                 {"members", r.members},
                 {"rho_integral", r.rho_integral},
                 {"rho_sq_integral", r.rho_sq_integral},
                 {"dirichlet_sum", r.dirichlet_sum},
                 {"ratio", r.ratio},
                 {"bound", r.bound},
                 {"margin", r.margin},
                 {"gram_residual", r.gram_residual}});
  }
  return j.dump(2) + "\n";
}

namespace {

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<double> a_max, a_max_sphere, a_max_torus, step, tol, alpha, fig_a_max, fig_step;
  std::optional<int> n_max, threads;
  std::optional<std::string> out, json;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "flat key = value settings file");
  cmd->add_option("--a-max", o.a_max, "right end of the certified range for the selected target");
  cmd->add_option("--a-max-sphere", o.a_max_sphere, "certified range for the sphere series");
  cmd->add_option("--a-max-torus", o.a_max_torus, "certified range for the torus series");
  cmd->add_option("--step", o.step, "grid step of the certificates");
  cmd->add_option("--tol", o.tol, "series tolerance for figure data");
  cmd->add_option("--n-max", o.n_max, "degree cutoff N for empirical families");
  cmd->add_option("--alpha", o.alpha, "aspect of the elongated torus");
  cmd->add_option("--fig-a-max", o.fig_a_max, "right end of the figure 1 grid");
  cmd->add_option("--fig-step", o.fig_step, "figure grid step");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--json", o.json, "report path");
  cmd->add_option("--threads", o.threads, "worker threads for grid sweeps");
}

RunConfig resolve(const Overrides& o, const std::string& scope) {
  RunConfig c;
  if (o.config_path) apply_config_file(c, *o.config_path);
  if (o.a_max) {
    if (scope == "sphere" || scope == "all") c.a_max_sphere = *o.a_max;
    if (scope == "torus" || scope == "all") c.a_max_torus = *o.a_max;
    if (scope == "fig1") c.fig_a_max = *o.a_max;
    if (scope == "fig2") c.a_max_torus = *o.a_max;
  }
  if (o.a_max_sphere) c.a_max_sphere = *o.a_max_sphere;
  if (o.a_max_torus) c.a_max_torus = *o.a_max_torus;
  if (o.step) c.step = *o.step;
  if (o.tol) c.tol = *o.tol;
  if (o.alpha) c.alpha = *o.alpha;
  if (o.fig_a_max) c.fig_a_max = *o.fig_a_max;
  if (o.fig_step) c.fig_step = *o.fig_step;
  if (o.n_max) c.n_max = *o.n_max;
  if (o.threads) c.threads = *o.threads;
  if (o.out) c.out = *o.out;
  if (o.json) c.json = *o.json;
  validate(c);
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certification of spectral-series bounds and Lieb-Thirring ratios on the sphere and torus", "ltcert"};
  app.require_subcommand(1);
  Overrides o;
  std::string target, which, domain, report_path;

  auto* verify = app.add_subcommand("verify", "run certificates and write a JSON report");
  verify->add_option("target", target, "sphere | torus | profile | all")
      ->required()
      ->check(CLI::IsMember({"sphere", "torus", "profile", "all"}));
  add_common(verify, o);

  auto* figures = app.add_subcommand("figures", "write figure data as CSV");
  figures->add_option("which", which, "fig1 | fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  add_common(figures, o);

  auto* empirical = app.add_subcommand("empirical", "Lieb-Thirring ratios of explicit families");
  empirical->add_option("domain", domain, "sphere | torus | elongated")
      ->required()
      ->check(CLI::IsMember({"sphere", "torus", "elongated"}));
  add_common(empirical, o);

  auto* report = app.add_subcommand("report", "print a saved JSON report; exit status is its verdict");
  report->add_option("file", report_path, "report written by verify")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    if (*report) {
      const Report r = parse_report(read_file(report_path));
      out << "report: " << r.command << "\n";
      print_records(out, r.records);
      out << r.records.size() << " records, " << std::count_if(r.records.begin(), r.records.end(), [](const auto& x) {
        return !x.pass;
      }) << " failed\n";
      return r.pass() ? kExitPass : kExitRecordFailed;
    }
    if (*verify) {
      const RunConfig c = resolve(o, target);
      Report r{"verify " + target, settings_of(c), verify_target(target, c)};
      print_records(out, r.records);
      const std::filesystem::path path =
          c.json.empty() ? std::filesystem::path(c.out) / ("verify_" + target + ".json") : std::filesystem::path(c.json);
      write_file(path, emit_report(r));
      const auto failed =
          std::count_if(r.records.begin(), r.records.end(), [](const auto& x) { return !x.pass; });
      out << r.records.size() << " records, " << failed << " failed; report written to " << path.string() << "\n";
      return r.pass() ? kExitPass : kExitRecordFailed;
    }
    if (*figures) {
      const RunConfig c = resolve(o, which);
      const std::filesystem::path path = std::filesystem::path(c.out) / (which + ".csv");
      write_file(path, which == "fig1" ? figure1_csv(c) : figure2_csv(c));
      out << "wrote " << path.string() << "\n";
      return kExitPass;
    }
    const RunConfig c = resolve(o, domain);
    const std::vector<LtReport> reports = empirical_reports(domain, c);
    const std::filesystem::path path = std::filesystem::path(c.out) / ("empirical_" + domain + ".csv");
    write_file(path, lt_reports_csv(reports));
    if (!c.json.empty()) write_file(c.json, lt_reports_json(reports));
    bool ok = true;
    for (const auto& r : reports) {
      out << std::left << std::setw(40) << r.family << " ratio " << std::setw(22) << format_number(r.ratio)
          << " bound " << format_number(r.bound) << "\n";
      ok = ok && r.margin > 0.0;
    }
    out << "wrote " << path.string() << "\n";
    return ok ? kExitPass : kExitRecordFailed;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace ltcert

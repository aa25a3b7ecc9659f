// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ltcert/empirical.hpp"
#include "ltcert/profile.hpp"
#include "ltcert/sphere_series.hpp"
#include "ltcert/torus_series.hpp"

using namespace ltcert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& x) {
    s_ << x;
    return *this;
  }
  std::string str() const { return s_.str(); }

 private:
  std::ostringstream s_;
};

Outcome sphere_certificate() {
  const SphereCertificate c = certify_below_one_sphere(40.0, 0.01);
  const double edge_floor = 8.0 / (3.0 * kPi * 40.0) - 1e-3;
  const bool pass = c.grid.pass && c.max_value < 1.0 && c.min_margin > 0.0 && c.margin_at_edge >= edge_floor;
  Detail d;
  d << "max H = " << c.max_value << ", min margin = " << c.min_margin << ", edge margin = " << c.margin_at_edge
    << " (floor " << edge_floor << ")";
  return {pass, d.str()};
}

Outcome closed_form_agreement() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = 0.1 * std::pow(1000.0, i / 19.0);
    worst = std::max(worst, std::fabs(h_s2_closed_form(a).value - h_s2_direct(a, 1e-15).value));
  }
  Detail d;
  d << "max |closed form - direct| = " << worst;
  return {worst <= 1e-10, d.str()};
}

Outcome sphere_remainder() {
  const std::vector<double> a = {100.0};
  const double r = remainder_curve(a)[0].remainder_scaled;
  const double target = -64.0 / (315.0 * kPi);
  Detail d;
  d << "(H - 1 + 8/(3 pi a)) a^3 at a = 100: " << r << ", limit " << target;
  return {std::fabs(r - target) < 5e-3, d.str()};
}

Outcome torus_certificate() {
  const TorusCertificate c = certify_below_one_torus(50.0, 0.01);
  const double R20 = poisson_remainder(20.0).R;
  const double opt = envelope_crossing(optimistic_envelope);
  const double cons = envelope_crossing(conservative_envelope);
  const bool pass = c.grid.pass && c.max_value < 1.0 && std::fabs(R20) < 5e-3 && std::fabs(opt - 14.73) <= 0.1 &&
                    std::fabs(cons - 273.8) <= 0.5;
  Detail d;
  d << "max H = " << c.max_value << ", |R(20)| = " << std::fabs(R20) << ", crossings " << opt << " and " << cons;
  return {pass, d.str()};
}

Outcome hankel_bound() {
  double worst = std::numeric_limits<double>::infinity();
  double at = 0.0;
  for (int i = 1; i <= 120; ++i) {
    const double xi = 0.5 * i;
    const double bound = std::exp(-xi / 2.0);
    const double tol = 1e-3 * bound;
    // the quadrature tolerance is charged against the slack
    const double slack = bound - std::fabs(hankel_hhat(xi, tol)) - tol;
    if (slack / bound < worst) {
      worst = slack / bound;
      at = xi;
    }
  }
  Detail d;
  d << "min (e^{-xi/2} - |h^| - tol) e^{xi/2} = " << worst << " at xi = " << at;
  return {worst > 0.0, d.str()};
}

Outcome strip_inequality() {
  const StripCertificate c = strip_inequality_check(1.0 / 4.6, 4.75, 1e4);
  Detail d;
  d << "min sample " << c.min_sample << ", certified grid margin " << c.grid.margin << ", leading margin "
    << c.leading.margin << ", " << c.intervals << " cells";
  return {c.pass(), d.str()};
}

Outcome addition_theorems() {
  const RecordSet r = addition_theorem_check(20, 10, 100, 7);
  Detail d;
  d << "max deviations " << r[0].computed << " (scalar), " << r[1].computed << " (vector)";
  return {all_pass(r) && r[0].computed <= 1e-10 && r[1].computed <= 1e-10, d.str()};
}

Outcome semiclassical() {
  const auto seq = semiclassical_sequence(20);
  bool pass = seq.size() == 19;
  double worst = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& p = seq[i];
    const double N2 = static_cast<double>(p.N) * p.N;
    worst = std::max(worst, std::fabs(p.ratio - (N2 - 1.0) / (2.0 * kPi * N2)));
    pass = pass && p.ratio < 3.0 * kPi / 32.0;
    pass = pass && p.gap <= 1.0 / (2.0 * kPi * N2) + 1e-10;
    if (i > 0) pass = pass && p.ratio > seq[i - 1].ratio;
  }
  pass = pass && worst <= 1e-10;
  Detail d;
  d << "max |ratio - (N^2-1)/(2 pi N^2)| = " << worst << " for N = 2..20, ratio(20) = " << seq.back().ratio;
  return {pass, d.str()};
}

Outcome profile() {
  const BudgetProfile p = BudgetProfile::normalized();
  const CrossChecked n = normalization_residual(p);
  const CrossChecked o = objective_value(p);
  const double six_A = 6.0 * induced_A(p);
  const bool pass = std::fabs(n.closed_form) <= 1e-12 && std::fabs(n.quadrature) <= 1e-12 &&
                    std::fabs(o.closed_form - kPi * kPi * kPi / 16.0) <= 1e-10 &&
                    std::fabs(o.quadrature - kPi * kPi * kPi / 16.0) <= 1e-10 &&
                    std::fabs(six_A - 3.0 * kPi / 32.0) <= 4.0 * std::numeric_limits<double>::epsilon();
  Detail d;
  d << "normalization residual " << n.quadrature << ", objective " << o.quadrature << ", 6A = " << six_A;
  return {pass, d.str()};
}

Outcome pipeline() {
  const std::vector<double> energies = {1.0, 5.0, 20.0};
  PipelineDetail detail;
  const RecordSet r =
      pipeline_consistency(build_family(SphereScalarSpec{3}), energies, BudgetProfile::normalized(), &detail);
  Detail d;
  d << "min pointwise slack " << detail.min_pointwise_slack << ", max energy deviation "
    << detail.max_energy_deviation;
  return {all_pass(r) && detail.max_energy_deviation <= 1e-8, d.str()};
}

Outcome elongated() {
  bool pass = true;
  double worst = 0.0;
  for (double alpha : {1.0, 0.5, 0.1, 0.01}) {
    const ElongatedReport e = elongated_ratio(alpha);
    const double closed = 3.0 / (8.0 * kPi * kPi * alpha);
    worst = std::max(worst, std::fabs(e.report.ratio - closed));
    pass = pass && std::fabs(e.report.ratio - closed) <= 1e-10 && e.report.ratio < (3.0 * kPi / 32.0) / alpha;
  }
  TorusSpec s{TorusDomain::elongated(0.5), {{1, 0}, {-1, 1}, {2, 1}, {0, 1}, {3, -2}}};
  const LiftCheck lift = periodic_lift_check(build_family(s));
  pass = pass && lift.record.pass && lift.gram_residual <= 1e-10 &&
         std::fabs(lift.rho_sq_lifted - 0.5 * lift.rho_sq_original) <= 1e-10 &&
         std::fabs(lift.dirichlet_lifted - lift.dirichlet_original) <= 1e-10;
  Detail d;
  d << "max |ratio - 3/(8 pi^2 alpha)| = " << worst << ", lift Gram residual " << lift.gram_residual;
  return {pass, d.str()};
}

Outcome vector_families() {
  bool pass = true;
  double worst_gap = 0.0, max_mixed = 0.0, max_single = 0.0;
  for (int N = 2; N <= 10; ++N) {
    const double s = lt_ratio(build_family(SphereScalarSpec{N})).ratio;
    const double w = lt_ratio(build_family(SphereWSpec{N})).ratio;
    const double v = lt_ratio(build_family(SphereVSpec{N})).ratio;
    const double m = lt_ratio(build_family(SphereMixedSpec{N})).ratio;
    worst_gap = std::max(worst_gap, std::fabs(s - w));
    max_single = std::max({max_single, w, v});
    max_mixed = std::max(max_mixed, m);
  }
  pass = worst_gap <= 1e-10 && max_single <= 3.0 * kPi / 32.0 && max_mixed <= 3.0 * kPi / 16.0;
  Detail d;
  d << "max mixed ratio " << max_mixed << ", max single-kind ratio " << max_single << ", max |scalar - w| "
    << worst_gap << " for N = 2..10";
  return {pass, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sphere series below one on (0, 40]", sphere_certificate},
      {"digamma closed form matches the direct sum", closed_form_agreement},
      {"sphere remainder approaches -64/(315 pi)", sphere_remainder},
      {"torus series below one on (0, 50] and remainder thresholds", torus_certificate},
      {"radial transform below exp(-xi/2)", hankel_bound},
      {"strip polynomial positive", strip_inequality},
      {"addition theorems", addition_theorems},
      {"semiclassical sequence", semiclassical},
      {"budget profile constants", profile},
      {"filtered pipeline identities", pipeline},
      {"elongated torus ratios and periodic lift", elongated},
      {"vector family ratios", vector_families},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << o.detail << "; " << std::setprecision(3) << secs << " s]" << std::setprecision(6) << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

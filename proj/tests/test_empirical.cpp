#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "generators.hpp"
#include "ltcert/empirical.hpp"
#include "ltcert/sphere_series.hpp"

using namespace ltcert;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("property: density integrates to the member count") {
  for (int N = 2; N <= 9; ++N) {
    for (const FamilySpec& spec : {FamilySpec{SphereScalarSpec{N}}, FamilySpec{SphereWSpec{N}},
                                   FamilySpec{SphereMixedSpec{N}}}) {
      const auto f = build_family(spec);
      CHECK(density(f).integral() == doctest::Approx(static_cast<double>(f.size())).epsilon(1e-12));
    }
  }
  TorusSpec t;
  t.domain = TorusDomain::elongated(0.5);
  t.modes = {{1, 0}, {0, 1}, {2, -1}, {-3, 2}};
  CHECK(density(build_family(t)).integral() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("lt_bound by family kind") {
  CHECK(lt_bound(build_family(SphereScalarSpec{3})) == doctest::Approx(3.0 * kPi / 32.0));
  CHECK(lt_bound(build_family(SphereWSpec{3})) == doctest::Approx(3.0 * kPi / 32.0));
  CHECK(lt_bound(build_family(SphereMixedSpec{3})) == doctest::Approx(3.0 * kPi / 16.0));
  TorusSpec t;
  t.domain = TorusDomain::elongated(0.25);
  t.modes = {{1, 0}};
  CHECK(lt_bound(build_family(t)) == doctest::Approx(4.0 * 3.0 * kPi / 32.0));
}

TEST_CASE("semiclassical sequence follows the closed form") {
  const auto seq = semiclassical_sequence(12);
  REQUIRE(seq.size() == 11);
  for (const auto& p : seq) {
    CAPTURE(p.N);
    CHECK(p.closed_form == doctest::Approx((p.N * p.N - 1.0) / (2.0 * kPi * p.N * p.N)));
    CHECK(std::fabs(p.ratio - p.closed_form) < 1e-12);
    CHECK(p.gap > 0.0);
  }
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].gap < seq[i - 1].gap);
  const auto threaded = semiclassical_sequence(12, 3);
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(threaded[i].ratio == seq[i].ratio);
  CHECK_THROWS_AS(semiclassical_sequence(1), std::invalid_argument);
}

TEST_CASE("property: w, v and scalar families share the ratio; mixed doubles it") {
  for (int N = 2; N <= 7; ++N) {
    const double s = lt_ratio(build_family(SphereScalarSpec{N})).ratio;
    CHECK(lt_ratio(build_family(SphereWSpec{N})).ratio == doctest::Approx(s).epsilon(1e-12));
    CHECK(lt_ratio(build_family(SphereVSpec{N})).ratio == doctest::Approx(s).epsilon(1e-12));
    const LtReport m = lt_ratio(build_family(SphereMixedSpec{N}));
    CHECK(m.ratio == doctest::Approx(2.0 * s).epsilon(1e-12));
    CHECK(m.margin > 0.0);
  }
}

TEST_CASE("lt_ratio rejects non-orthonormal families") {
  const auto f = build_family(SphereScalarSpec{3});
  const auto scaled = f.with_coefficients(2.0 * f.coefficients(), "scaled");
  CHECK_THROWS_AS(lt_ratio(scaled), OrthonormalityError);
}

TEST_CASE("property: random torus families respect the bound") {
  Gen g(81);
  for (int trial = 0; trial < 20; ++trial) {
    TorusSpec t;
    t.domain = TorusDomain::elongated(1.0 / g.integer(1, 4));
    std::set<std::pair<int, int>> seen;
    const int count = g.integer(1, 12);
    while (static_cast<int>(t.modes.size()) < count) {
      const TorusMode m{g.integer(-4, 4), g.integer(-4, 4)};
      if ((m.k1 != 0 || m.k2 != 0) && seen.insert({m.k1, m.k2}).second) t.modes.push_back(m);
    }
    const auto f = build_family(t);
    const auto mixed = f.mixed(random_orthogonal(f.size(), static_cast<unsigned>(trial)).cast<std::complex<double>>());
    const LtReport r = lt_ratio(mixed);
    CHECK(r.ratio < r.bound);
    CHECK(r.gram_residual < 1e-12);
  }
}

TEST_CASE("elongated sine ratio") {
  for (double alpha : {1.0, 0.5, 0.1, 0.01}) {
    CAPTURE(alpha);
    const ElongatedReport e = elongated_ratio(alpha);
    CHECK(e.closed_form == doctest::Approx(3.0 / (8.0 * kPi * kPi * alpha)).epsilon(1e-15));
    CHECK(e.report.ratio == doctest::Approx(e.closed_form).epsilon(1e-12));
    CHECK(e.quadrature_ratio == doctest::Approx(e.closed_form).epsilon(1e-12));
    CHECK(e.report.ratio < e.report.bound);
  }
  CHECK_THROWS_AS(elongated_ratio(0.0), std::invalid_argument);
  CHECK_THROWS_AS(elongated_ratio(1.5), std::invalid_argument);
}

TEST_CASE("periodic lift check") {
  TorusSpec t;
  t.domain = TorusDomain::elongated(0.5);
  t.modes = {{1, 0}, {-1, 1}, {2, 1}, {0, 1}, {3, -2}};
  const LiftCheck c = periodic_lift_check(build_family(t));
  CHECK(c.copies == 2);
  CHECK(c.record.pass);
  CHECK(c.rho_sq_lifted == doctest::Approx(0.5 * c.rho_sq_original).epsilon(1e-12));
  CHECK(c.dirichlet_lifted == doctest::Approx(c.dirichlet_original).epsilon(1e-12));
  t.domain = TorusDomain::elongated(0.4);
  CHECK_THROWS_AS(periodic_lift_check(build_family(t)), std::invalid_argument);
}

TEST_CASE("chi bound check") {
  const std::vector<double> energies = {0.1, 1.0, 10.0, 100.0, 1000.0};
  const RecordSet r = chi_bound_check(energies);
  REQUIRE(r.size() == 2);
  CHECK(all_pass(r));
  CHECK(r[1].computed < 1.0);
  CHECK(r[1].computed > 0.98);
  const std::vector<double> bad = {-1.0};
  CHECK_THROWS_AS(chi_bound_check(bad), std::invalid_argument);
  CHECK_THROWS_AS(chi_bound_check(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("pipeline consistency") {
  const std::vector<double> energies = {1.0, 5.0, 20.0};
  PipelineDetail d;
  const RecordSet r = pipeline_consistency(build_family(SphereScalarSpec{3}), energies, BudgetProfile::normalized(), &d);
  REQUIRE(r.size() == 2);
  CHECK(all_pass(r));
  CHECK(d.min_pointwise_slack >= -1e-12);
  CHECK(d.max_energy_deviation < 1e-8);
  const auto mixed = build_family(SphereScalarSpec{4});
  CHECK(all_pass(pipeline_consistency(mixed.mixed(random_orthogonal(mixed.size(), 5).cast<std::complex<double>>()),
                                      energies)));
  CHECK_THROWS_AS(pipeline_consistency(build_family(SphereWSpec{3}), energies), std::invalid_argument);
}

TEST_CASE("addition theorems") {
  const RecordSet r = addition_theorem_check();
  REQUIRE(r.size() == 2);
  CHECK(all_pass(r));
  CHECK_THROWS_AS(addition_theorem_check(5, 0), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "ltcert/quadrature.hpp"
#include "ltcert/specfun.hpp"

using namespace ltcert;

namespace {

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

double exact_integral(const std::vector<double>& c, double lo, double hi) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double p = static_cast<double>(i) + 1.0;
    s += c[i] * (std::pow(hi, p) - std::pow(lo, p)) / p;
  }
  return s;
}

}  // namespace

TEST_CASE("gauss_legendre weights sum to the interval length") {
  for (int L : {1, 2, 5, 17, 64, 200}) {
    const QuadratureRule r = gauss_legendre(L, {-2.0, 3.0});
    double w = 0.0;
    for (double x : r.weights) w += x;
    CHECK(std::fabs(w - 5.0) < 1e-13);
    for (double x : r.nodes) CHECK((x > -2.0 && x < 3.0));
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("property: gauss_legendre is exact up to degree 2L - 1") {
  Gen g(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int L = g.integer(1, 30);
    const auto c = g.coefficients(2 * L - 1);
    const double lo = g.uniform(-1.0, 0.0);
    const double hi = lo + g.uniform(0.1, 1.0);
    const double got = gauss_legendre(L, {lo, hi}).apply([&](double x) { return horner(c, x); });
    const double want = exact_integral(c, lo, hi);
    double scale = 0.0;
    for (double x : c) scale += std::fabs(x);
    CHECK(std::fabs(got - want) < 1e-13 * scale);
  }
}

TEST_CASE("gauss_legendre is not exact at degree 2L") {
  const QuadratureRule r = gauss_legendre(3);
  CHECK(std::fabs(r.apply([](double x) { return std::pow(x, 6); }) - 2.0 / 7.0) > 1e-3);
}

TEST_CASE("integrate_interval on smooth and peaked integrands") {
  const auto e = integrate_interval([](double x) { return std::exp(x); }, {0.0, 1.0}, 1e-14);
  CHECK(std::fabs(e.value - (std::numbers::e - 1.0)) < 1e-14);
  const auto p = integrate_interval([](double x) { return 1.0 / (1e-4 + x * x); }, {-1.0, 1.0}, 1e-10);
  CHECK(std::fabs(p.value - 2.0 * std::atan(100.0) * 100.0) < 1e-8);
  const auto s = integrate_interval([](double x) { return std::sqrt(x); }, {0.0, 1.0}, 1e-12);
  CHECK(std::fabs(s.value - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("integrate_interval raises on an unreachable tolerance") {
  CHECK_THROWS_AS(integrate_interval([](double x) { return std::sin(1.0 / x); }, {1e-9, 1.0}, 1e-15, 20),
                  ConvergenceError);
}

TEST_CASE("integrate_semi_infinite with smooth decay") {
  const auto a = integrate_semi_infinite([](double x) { return std::exp(-x); }, SmoothDecay{}, 1e-13);
  CHECK(std::fabs(a.value - 1.0) < 1e-13);
  const auto b = integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, SmoothDecay{}, 1e-12);
  CHECK(std::fabs(b.value - std::numbers::pi / 2.0) < 1e-11);
}

TEST_CASE("integrate_semi_infinite with Bessel panels") {
  // int_0^inf J0(xi r) r / (r^2 + 1)^{3/2} dr = exp(-xi)
  for (double xi : {0.5, 2.0, 7.0}) {
    const auto r = integrate_semi_infinite(
        [xi](double t) { return bessel_j0(xi * t) * t / std::pow(t * t + 1.0, 1.5); }, BesselOscillatory{xi},
        1e-12);
    CHECK(std::fabs(r.value - std::exp(-xi)) < 1e-10);
  }
  // int_0^inf J0(xi r) r exp(-r^2) dr = exp(-xi^2/4) / 2
  for (double xi : {1.0, 3.0}) {
    const auto c = integrate_semi_infinite([xi](double t) { return bessel_j0(xi * t) * t * std::exp(-t * t); },
                                           BesselOscillatory{xi}, 1e-13);
    CHECK(std::fabs(c.value - 0.5 * std::exp(-xi * xi / 4.0)) < 1e-12);
  }
}

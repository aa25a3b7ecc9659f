#include "ltcert/profile.hpp"

#include <cmath>
#include <stdexcept>

#include "ltcert/quadrature.hpp"

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_mu(const BudgetProfile& p) {
  if (!(p.mu > 0.0) || !std::isfinite(p.mu)) throw std::invalid_argument("profile: mu must be positive");
}

}  // namespace

double f_eval(const BudgetProfile& p, double t) {
  require_positive_mu(p);
  if (!(t >= 0.0)) throw std::invalid_argument("f_eval: t must be non-negative");
  return p(t);
}

double CrossChecked::discrepancy() const { return std::fabs(closed_form - quadrature); }

double squared_norm_of(const std::function<double(double)>& g, double tol) {
  return integrate_semi_infinite([&g](double t) { return g(t) * g(t); }, SmoothDecay{}, tol).value;
}

double objective_of(const std::function<double(double)>& g, double tol) {
  // (1 - g)^2 / t^2 is finite at 0 for profiles with g(0) = 1 and g'(0) = 0;
  // t = 0 itself is never a Kronrod node.
  auto integrand = [&g](double t) {
    const double d = 1.0 - g(t);
    return d * d / (t * t);
  };
  return kPi * integrate_semi_infinite(integrand, SmoothDecay{}, tol).value;
}

CrossChecked normalization_residual(const BudgetProfile& p) {
  require_positive_mu(p);
  CrossChecked out;
  out.closed_form = 0.25 * kPi / std::sqrt(p.mu) - 1.0;
  out.quadrature = squared_norm_of([&p](double t) { return p(t); }, 1e-14) - 1.0;
  return out;
}

CrossChecked objective_value(const BudgetProfile& p) {
  require_positive_mu(p);
  CrossChecked out;
  out.closed_form = 0.25 * kPi * kPi * std::sqrt(p.mu);
  // (1 - f)^2 / t^2 = mu^2 t^2 / (1 + mu t^2)^2 avoids cancellation near 0
  auto integrand = [&p](double t) {
    const double q = 1.0 + p.mu * t * t;
    return p.mu * p.mu * t * t / (q * q);
  };
  out.quadrature = kPi * integrate_semi_infinite(integrand, SmoothDecay{}, 1e-14).value;
  return out;
}

double induced_A(const BudgetProfile& p) {
  require_positive_mu(p);
  // (1/4pi) sqrt(mu) int_0^inf dt / (1 + t^2)^2 = (1/4pi) sqrt(mu) (pi/4)
  return std::sqrt(p.mu) / 16.0;
}

ProfileReport profile_report(const BudgetProfile& p) {
  return {p.mu, normalization_residual(p).closed_form, objective_value(p).closed_form, induced_A(p)};
}

double normalizing_mu() {
  auto residual = [](double mu) {
    const BudgetProfile p{mu};
    return squared_norm_of([&p](double t) { return p(t); }, 1e-15) - 1.0;
  };
  // residual is decreasing in mu
  double lo = 0.1;
  double hi = 10.0;
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double positive_part_integral(double rho, double A) {
  if (!(rho >= 0.0) || !(A > 0.0)) throw std::invalid_argument("positive_part_integral: need rho >= 0, A > 0");
  if (rho == 0.0) return 0.0;
  const double sqrt_rho = std::sqrt(rho);
  auto integrand = [sqrt_rho, A](double e) {
    const double d = sqrt_rho - std::sqrt(A * e);
    return d > 0.0 ? d * d : 0.0;
  };
  const double support = rho / A;
  return integrate_interval(integrand, {0.0, support}, 1e-15 * rho * support).value;
}

double integral_identity_check(double rho, double A) {
  if (rho == 0.0) return 0.0;
  const double expected = rho * rho / (6.0 * A);
  return std::fabs(positive_part_integral(rho, A) - expected) / expected;
}

}  // namespace ltcert

#include "ltcert/sphere_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ltcert/parallel.hpp"
#include "ltcert/specfun.hpp"
#include "ltcert/summation.hpp"

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument(std::string(what) + ": a must be positive");
}

// Smallest N with scale / (3 N^6) <= tol, at least 2.
long cutoff_for(double scale, double tol) {
  const double n = std::ceil(std::pow(scale / (3.0 * tol), 1.0 / 6.0));
  return std::max<long>(2, static_cast<long>(n));
}

}  // namespace

std::string_view to_string(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::direct: return "direct";
    case SeriesMethod::closed_form: return "closed-form";
    case SeriesMethod::asymptotic: return "asymptotic";
  }
  return "unknown";
}

SphereSeriesEval h_s2_direct(double a, double tol) {
  require_positive(a, "h_s2_direct");
  if (!(tol > 0.0)) throw std::invalid_argument("h_s2_direct: tol must be positive");
  const double prefactor = 4.0 / kPi * a * a * a;
  const long n_max = cutoff_for(prefactor, tol);
  const double a2 = a * a;
  CompensatedSum<double> sum;
  for (long n = n_max; n >= 1; --n) {
    const double x = static_cast<double>(n) * static_cast<double>(n + 1);
    const double d = x * x + a2;
    sum += (2.0 * n + 1.0) / (d * d);
  }
  SphereSeriesEval out;
  out.a = a;
  out.value = prefactor * sum.value();
  out.method = SeriesMethod::direct;
  out.tail_bound = prefactor / (3.0 * std::pow(static_cast<double>(n_max), 6));
  out.terms = n_max;
  return out;
}

SphereSeriesEval h_s2_closed_form(double a) {
  require_positive(a, "h_s2_closed_form");
  const Complex i{0.0, 1.0};
  // roots of n^2 + n - i a (for u) and n^2 + n + i a (for conj(u))
  const Complex s = std::sqrt(Complex{1.0, 4.0 * a});
  const Complex sc = std::sqrt(Complex{1.0, -4.0 * a});
  const Complex z1 = 0.5 * (3.0 - s);
  const Complex z2 = 0.5 * (3.0 + s);
  const Complex w1 = 0.5 * (3.0 - sc);
  const Complex w2 = 0.5 * (3.0 + sc);

  const Complex sum_u2 = (trigamma(z1) - trigamma(z2)) / s;
  const Complex sum_v2 = (trigamma(w1) - trigamma(w2)) / sc;
  const Complex sum_u_minus_v = -(digamma(z1) + digamma(z2)) + (digamma(w1) + digamma(w2));

  const double a2 = a * a;
  const Complex series = -(sum_u2 + sum_v2) / (4.0 * a2) + sum_u_minus_v / (4.0 * i * a2 * a);
  const Complex h = 4.0 / kPi * a2 * a * series;

  SphereSeriesEval out;
  out.a = a;
  out.value = h.real();
  out.method = SeriesMethod::closed_form;
  out.imag_residue = std::fabs(h.imag());
  return out;
}

double h_s2_small_a_coefficient() {
  // tail sum_{n>N} 2/n^7 <= 1/(3 N^6) ~ 3e-19 at N = 1000
  CompensatedSum<double> sum;
  for (long n = 1000; n >= 1; --n) {
    const double x = static_cast<double>(n) * static_cast<double>(n + 1);
    const double x2 = x * x;
    sum += (2.0 * n + 1.0) / (x2 * x2);
  }
  return 4.0 / kPi * sum.value();
}

double sphere_shell_sum(double a, double tol) {
  require_positive(a, "sphere_shell_sum");
  // sum (2n+1) g(n(n+1)/a) = a^4 sum (2n+1) / (x^2 + a^2)^2 = (pi/4) a H(a)
  const SphereSeriesEval h = h_s2_direct(a, tol / (0.25 * kPi * a));
  return 0.25 * kPi * a * h.value;
}

double spectral_expansion(const AsymptoticCoefficients& c, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("spectral_expansion: nu must be positive");
  return c.integral / nu - 2.0 / 3.0 * c.g0 - nu * c.g1 / 15.0 + 4.0 / 315.0 * nu * nu * c.g2;
}

std::vector<RemainderPoint> remainder_curve(std::span<const double> a_grid, int threads) {
  for (double a : a_grid) {
    if (!(a >= 1.0)) throw std::invalid_argument("remainder_curve: grid values must be >= 1");
  }
  return parallel_map<RemainderPoint>(
      a_grid.size(),
      [&](std::size_t k) {
        const double a = a_grid[k];
        const double h = h_s2_direct(a, 1e-16).value;
        return RemainderPoint{a, h, (h - 1.0 + 8.0 / (3.0 * kPi * a)) * a * a * a};
      },
      threads);
}

double chi_kernel_norm_sq(double energy, const BudgetProfile& p, double tol) {
  if (!(energy >= 0.0)) throw std::invalid_argument("chi_kernel_norm_sq: energy must be non-negative");
  if (energy == 0.0) return 0.0;
  // (1 - f(t))^2 <= mu^2 t^4 and (2n+1)/(n(n+1))^4 <= 2/n^7
  const double scale = p.mu * p.mu * std::pow(energy, 4) / (4.0 * kPi);
  const long n_max = cutoff_for(scale, tol);
  CompensatedSum<double> sum;
  for (long n = n_max; n >= 1; --n) {
    const double t = energy / (static_cast<double>(n) * static_cast<double>(n + 1));
    const double mt2 = p.mu * t * t;
    const double one_minus_f = mt2 / (1.0 + mt2);
    sum += (2.0 * n + 1.0) * one_minus_f * one_minus_f;
  }
  return sum.value() / (4.0 * kPi);
}

SphereCertificate certify_below_one_sphere(double a_max, double step, int threads) {
  if (!(a_max > 0.0) || !(step > 0.0) || step > a_max)
    throw std::invalid_argument("certify_below_one_sphere: need 0 < step <= a_max");
  const auto n = static_cast<std::size_t>(std::llround(a_max / step));
  const std::vector<double> values = parallel_map<double>(
      n, [&](std::size_t k) { return h_s2_direct(static_cast<double>(k + 1) * step, 1e-14).value; },
      threads);

  SphereCertificate cert;
  double previous = 0.0;  // H(0) = 0
  double max_jump = 0.0;
  cert.max_value = 0.0;
  for (double h : values) {
    max_jump = std::max(max_jump, std::fabs(h - previous));
    cert.max_value = std::max(cert.max_value, h);
    previous = h;
  }
  cert.min_margin = 1.0 - cert.max_value;
  cert.margin_at_edge = 1.0 - values.back();
  cert.lipschitz = 2.0 * max_jump / step;
  const double certified = cert.min_margin - 0.5 * cert.lipschitz * step;
  cert.grid = make_record(
      "H_S2 < 1 on grid", "H_S2(a) < 1 for 0 < a <= a_max", cert.max_value, 1.0, certified,
      "grid of " + std::to_string(n) + " points, step " + format_number(step) + ", a_max " +
          format_number(a_max) + "; min margin " + format_number(cert.min_margin) +
          ", Lipschitz allowance " + format_number(0.5 * cert.lipschitz * step) +
          " (2x max finite-difference slope); margin at a_max " + format_number(cert.margin_at_edge));

  std::vector<double> tail_grid;
  for (double a = a_max; a <= 4.0 * a_max; a += 1.0) tail_grid.push_back(std::max(a, 1.0));
  double worst = 0.0;
  for (const auto& pt : remainder_curve(tail_grid, threads)) worst = std::max(worst, std::fabs(pt.remainder_scaled));
  cert.remainder_constant = 2.0 * worst;
  const double leading = 8.0 / (3.0 * kPi);
  const double correction = cert.remainder_constant / (a_max * a_max);
  cert.tail = make_record(
      "H_S2 < 1 beyond a_max", "(1 - H_S2(a)) a >= 8/(3 pi) - C / a^2 > 0 for a > a_max", correction,
      leading, leading - correction,
      "C = 2 x max |(H - 1 + 8/(3 pi a)) a^3| measured on [a_max, 4 a_max] = " +
          format_number(cert.remainder_constant) + "; relies on the third-order expansion beyond the sampled range");
  return cert;
}

}  // namespace ltcert

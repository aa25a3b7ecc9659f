#include "ltcert/torus_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ltcert/parallel.hpp"
#include "ltcert/quadrature.hpp"
#include "ltcert/specfun.hpp"
#include "ltcert/summation.hpp"

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

double evaluate(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<double> multiply(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

// Shell sum of count / (m^2 + a^2)^2 over shells with norm <= max_norm,
// smallest terms first.
double shell_sum(double a, std::int64_t max_norm, const LatticeShellTable& table) {
  const auto& shells = table.shells();
  const auto end = std::upper_bound(shells.begin(), shells.end(), max_norm,
                                    [](std::int64_t m, const Shell& s) { return m < s.norm; });
  const double a2 = a * a;
  CompensatedSum<double> sum;
  for (auto it = std::make_reverse_iterator(end); it != shells.rend(); ++it) {
    const auto m = static_cast<double>(it->norm);
    const double d = m * m + a2;
    sum += static_cast<double>(it->count) / (d * d);
  }
  return sum.value();
}

}  // namespace

LatticeShellTable::LatticeShellTable(std::int64_t max_norm) : max_norm_(max_norm) {
  if (max_norm < 1) throw std::invalid_argument("LatticeShellTable: max_norm must be >= 1");
  if (max_norm > kMaxNorm) throw std::length_error("LatticeShellTable: max_norm too large");
  std::vector<std::int32_t> r2(static_cast<std::size_t>(max_norm) + 1, 0);
  // the quarter-turn images of {x >= 1, y >= 0} partition Z^2 \ {0}
  const std::int64_t k = isqrt(max_norm);
  for (std::int64_t x = 1; x <= k; ++x) {
    const std::int64_t y_max = isqrt(max_norm - x * x);
    for (std::int64_t y = 0; y <= y_max; ++y) r2[static_cast<std::size_t>(x * x + y * y)] += 4;
  }
  std::int64_t total = 0;
  for (std::int64_t m = 1; m <= max_norm; ++m) {
    const std::int32_t c = r2[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    shells_.push_back({m, c});
    total += c;
    cumulative_.push_back(total);
  }
}

std::int64_t LatticeShellTable::r2(std::int64_t m) const {
  if (m < 1 || m > max_norm_) throw std::out_of_range("LatticeShellTable::r2: norm outside table");
  const auto it = std::lower_bound(shells_.begin(), shells_.end(), m,
                                   [](const Shell& s, std::int64_t v) { return s.norm < v; });
  return (it != shells_.end() && it->norm == m) ? it->count : 0;
}

std::int64_t LatticeShellTable::lambda(std::int64_t j) const {
  if (j < 1 || j > point_count()) throw std::out_of_range("LatticeShellTable::lambda: index outside table");
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), j);
  return shells_[static_cast<std::size_t>(it - cumulative_.begin())].norm;
}

double lattice_tail_bound(std::int64_t max_norm) {
  const double d = std::sqrt(static_cast<double>(max_norm)) - kSqrt2;
  if (!(d > 0.0)) return std::numeric_limits<double>::infinity();
  const double d6 = std::pow(d, 6);
  return 2.0 * kPi * (1.0 / (6.0 * d6) + 1.0 / (7.0 * kSqrt2 * d6 * d));
}

std::int64_t shell_cutoff(double scale, double tol) {
  if (!(tol > 0.0) || !(scale >= 0.0)) throw std::invalid_argument("shell_cutoff: need tol > 0, scale >= 0");
  std::int64_t lo = 2;  // bound infinite here
  std::int64_t hi = 4;
  while (scale * lattice_tail_bound(hi) > tol) {
    lo = hi;
    hi *= 2;
    if (hi > LatticeShellTable::kMaxNorm) throw std::length_error("shell_cutoff: tolerance unreachable");
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (scale * lattice_tail_bound(mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

TorusSeriesEval h_t2_direct(double a, double tol, const LatticeShellTable& table) {
  if (!(a > 0.0)) throw std::invalid_argument("h_t2_direct: a must be positive");
  const double prefactor = 4.0 / (kPi * kPi) * a * a * a;
  const std::int64_t m = shell_cutoff(prefactor, tol);
  if (m > table.max_norm()) throw std::out_of_range("h_t2_direct: shell table too small for tolerance");
  TorusSeriesEval out;
  out.a = a;
  out.value = prefactor * shell_sum(a, m, table);
  out.tail_bound = prefactor * lattice_tail_bound(m);
  out.max_norm = m;
  return out;
}

TorusSeriesEval h_t2_direct(double a, double tol) {
  if (!(a > 0.0)) throw std::invalid_argument("h_t2_direct: a must be positive");
  const LatticeShellTable table(shell_cutoff(4.0 / (kPi * kPi) * a * a * a, tol));
  return h_t2_direct(a, tol, table);
}

double h_t2_enumerated_partial(double a, std::int64_t max_norm) {
  const std::int64_t k = isqrt(max_norm);
  const double a2 = a * a;
  CompensatedSum<double> sum;
  for (std::int64_t x = -k; x <= k; ++x) {
    for (std::int64_t y = -k; y <= k; ++y) {
      const std::int64_t m = x * x + y * y;
      if (m == 0 || m > max_norm) continue;
      const auto md = static_cast<double>(m);
      const double d = md * md + a2;
      sum += 1.0 / (d * d);
    }
  }
  return 4.0 / (kPi * kPi) * a * a2 * sum.value();
}

double conservative_envelope(double a) {
  const double alpha = kStripAlpha;
  return 2.0 * kSqrt2 * kStripB / (alpha * alpha) * std::exp(-alpha * kPi * std::sqrt(a) / 2.0);
}

double optimistic_envelope(double a) { return 64.0 / kPi * std::exp(-kPi * std::sqrt(a) / 4.0); }

double conservative_threshold_closed_form() {
  const double alpha = kStripAlpha;
  const double r = 2.0 / (alpha * kPi) * std::log(2.0 * kSqrt2 * kStripB / (alpha * alpha));
  return r * r;
}

double optimistic_threshold_closed_form() {
  const double r = 4.0 / kPi * std::log(64.0 / kPi);
  return r * r;
}

double envelope_crossing(double (*envelope)(double)) {
  double lo = 1e-6;
  double hi = 1.0;
  while (envelope(hi) >= 1.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (envelope(mid) >= 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RemainderEstimate poisson_remainder(double a, const LatticeShellTable& table, double tol) {
  if (!(a > 0.0)) throw std::invalid_argument("poisson_remainder: a must be positive");
  // sum ((m/a)^2 + 1)^{-2} = a^4 sum (m^2 + a^2)^{-2}; terms <= a^4 |k|^{-8}
  const double a4 = a * a * a * a;
  const std::int64_t m = shell_cutoff(a4, tol);
  if (m > table.max_norm()) throw std::out_of_range("poisson_remainder: shell table too small for tolerance");
  RemainderEstimate out;
  out.a = a;
  out.R = a4 * shell_sum(a, m, table) + 1.0 - kPi * kPi * a / 4.0;
  out.conservative_bound = conservative_envelope(a);
  out.optimistic_bound = optimistic_envelope(a);
  return out;
}

RemainderEstimate poisson_remainder(double a) {
  const LatticeShellTable table(shell_cutoff(a * a * a * a, 1e-12));
  return poisson_remainder(a, table, 1e-12);
}

double hankel_hhat(double xi, double tol) {
  if (!(xi >= 0.0)) throw std::invalid_argument("hankel_hhat: xi must be non-negative");
  auto radial = [](double r) {
    const double q = r * r * r * r + 1.0;
    return r / (q * q);
  };
  if (xi == 0.0) return integrate_semi_infinite(radial, SmoothDecay{}, tol).value;
  auto integrand = [&](double r) { return bessel_j0(xi * r) * radial(r); };
  return integrate_semi_infinite(integrand, BesselOscillatory{xi}, tol).value;
}

double poisson_remainder_spectral(double a, const LatticeShellTable& table, double tol) {
  if (!(a > 0.0)) throw std::invalid_argument("poisson_remainder_spectral: a must be positive");
  CompensatedSum<double> sum;
  for (const Shell& s : table.shells()) {
    const double xi = 2.0 * kPi * std::sqrt(a * static_cast<double>(s.norm));
    // remaining shells are bounded through |h^(xi)| < exp(-xi/2)
    if (2.0 * kPi * a * 8.0 * xi * xi * std::exp(-0.5 * xi) < 1e-3 * tol) break;
    const double per_point_tol = 1e-2 * tol / (2.0 * kPi * a * static_cast<double>(s.count));
    sum += static_cast<double>(s.count) * hankel_hhat(xi, per_point_tol);
  }
  return 2.0 * kPi * a * sum.value();
}

std::vector<double> strip_polynomial(double alpha, double b) {
  const double a2 = alpha * alpha;
  const double a4 = a2 * a2;
  const std::vector<double> real_part = {4.0 * a4 + 1.0, -12.0 * a2, 1.0};
  std::vector<double> p = multiply(real_part, real_part);
  const std::vector<double> shifted = {4.0 * a4, -4.0 * a2, 1.0};  // (t - 2 a^2)^2
  std::vector<double> imag_part = multiply({0.0, 32.0 * a2}, shifted);
  p.resize(5, 0.0);
  imag_part.resize(5, 0.0);
  for (std::size_t i = 0; i < 5; ++i) p[i] -= imag_part[i];
  p[0] -= 1.0 / b;
  p[4] -= 1.0 / b;
  return p;
}

StripCertificate strip_inequality_check(double alpha, double b, double t_max) {
  if (!(alpha > 0.0) || !(b > 0.0) || !(t_max > 0.0))
    throw std::invalid_argument("strip_inequality_check: alpha, b, t_max must be positive");
  const std::vector<double> p = strip_polynomial(alpha, b);
  std::vector<double> dp_abs;
  for (std::size_t i = 1; i < p.size(); ++i) dp_abs.push_back(std::fabs(static_cast<double>(i) * p[i]));

  StripCertificate cert;
  cert.min_sample = std::numeric_limits<double>::infinity();
  double min_certified = std::numeric_limits<double>::infinity();
  bool sample_failure = false;
  bool depth_failure = false;

  struct Cell {
    double t0, t1, p0, p1;
    int depth;
  };
  std::vector<Cell> stack;
  const int cells = 100000;
  const double h = t_max / cells;
  double prev_t = 0.0;
  double prev_p = evaluate(p, 0.0);
  for (int i = 1; i <= cells; ++i) {
    const double t = (i == cells) ? t_max : i * h;
    const double pt = evaluate(p, t);
    stack.push_back({prev_t, t, prev_p, pt, 0});
    prev_t = t;
    prev_p = pt;
  }
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    ++cert.intervals;
    cert.min_sample = std::min({cert.min_sample, c.p0, c.p1});
    if (c.p0 <= 0.0 || c.p1 <= 0.0) {
      sample_failure = true;
      continue;
    }
    const double slope = evaluate(dp_abs, c.t1);  // max |P'| on [t0, t1], t >= 0
    const double lower = 0.5 * (c.p0 + c.p1) - 0.5 * slope * (c.t1 - c.t0);
    if (lower > 0.0) {
      min_certified = std::min(min_certified, lower);
      continue;
    }
    if (c.depth >= 60) {
      depth_failure = true;
      continue;
    }
    const double tm = 0.5 * (c.t0 + c.t1);
    const double pm = evaluate(p, tm);
    stack.push_back({c.t0, tm, c.p0, pm, c.depth + 1});
    stack.push_back({tm, c.t1, pm, c.p1, c.depth + 1});
  }
  const double grid_margin = (sample_failure || depth_failure) ? std::min(cert.min_sample, 0.0) : min_certified;
  cert.grid = make_record("strip polynomial positive on [0, t_max]",
                          "(t^2-12a^2t+4a^4+1)^2 - 32a^2t(t-2a^2)^2 > (t^4+1)/b for 0 <= t <= t_max",
                          cert.min_sample, 0.0, grid_margin,
                          "alpha " + format_number(alpha) + ", b " + format_number(b) + ", t_max " +
                              format_number(t_max) + "; " + std::to_string(cert.intervals) +
                              " cells after derivative-based subdivision; margin is the smallest certified cell lower bound");

  double tail = p[4];
  for (std::size_t i = 0; i < 4; ++i) tail -= std::fabs(p[i]) * std::pow(t_max, static_cast<double>(i) - 4.0);
  cert.leading = make_record("strip polynomial positive beyond t_max", "leading coefficient 1 - 1/b dominates for t >= t_max",
                             p[4], 0.0, tail,
                             "c4 - sum_{i<4} |c_i| t_max^(i-4); c4 = " + format_number(p[4]));
  return cert;
}

double tail_chain_sum(double L) {
  if (!(L > 0.0)) throw std::invalid_argument("tail_chain_sum: L must be positive");
  const double cut = 45.0 / (2.0 * L);
  const auto terms = static_cast<std::int64_t>(std::ceil(cut * cut)) + 1;
  if (terms > 200'000'000) throw std::length_error("tail_chain_sum: L too small");
  CompensatedSum<double> sum;
  for (std::int64_t j = terms; j >= 1; --j) sum += std::exp(-2.0 * L * std::sqrt(static_cast<double>(j)));
  // int_J^inf exp(-2 L sqrt x) dx = exp(-2 L sqrt J) (2 L sqrt J + 1) / (2 L^2)
  const double rj = std::sqrt(static_cast<double>(terms));
  return sum.value() + std::exp(-2.0 * L * rj) * (2.0 * L * rj + 1.0) / (2.0 * L * L);
}

VerificationRecord tail_chain_check(double L) {
  const double lhs = tail_chain_sum(L);
  const double rhs = std::exp(-L) * 2.0 / (L * L);
  const double integral =
      integrate_semi_infinite([L](double x) { return std::exp(-L * std::sqrt(x)); }, SmoothDecay{}, 1e-14).value;
  return upper_bound_record("lattice tail chain at L = " + format_number(L),
                            "sum_j exp(-2 L sqrt j) <= exp(-L) 2/L^2", lhs, rhs,
                            "quadrature of int_0^inf exp(-L sqrt x) dx = " + format_number(integral) +
                                " vs 2/L^2 = " + format_number(2.0 / (L * L)));
}

RecordSet TorusCertificate::records() const {
  if (tail_engaged) return {grid, tail};
  return {grid};
}

TorusCertificate certify_below_one_torus(double a_max, double step, int threads) {
  if (!(a_max > 0.0) || !(step > 0.0) || step > a_max)
    throw std::invalid_argument("certify_below_one_torus: need 0 < step <= a_max");
  constexpr double kTol = 1e-11;
  const LatticeShellTable table(shell_cutoff(4.0 / (kPi * kPi) * a_max * a_max * a_max, kTol));
  const auto n = static_cast<std::size_t>(std::llround(a_max / step));
  const std::vector<double> values = parallel_map<double>(
      n, [&](std::size_t k) { return h_t2_direct(static_cast<double>(k + 1) * step, kTol, table).value; }, threads);

  TorusCertificate cert;
  double previous = 0.0;
  double max_jump = 0.0;
  for (double h : values) {
    max_jump = std::max(max_jump, std::fabs(h - previous));
    cert.max_value = std::max(cert.max_value, h);
    previous = h;
  }
  cert.min_margin = 1.0 - cert.max_value;
  cert.margin_at_edge = 1.0 - values.back();
  cert.lipschitz = 2.0 * max_jump / step;
  const double threshold = optimistic_threshold_closed_form();
  cert.tail_engaged = a_max >= threshold;
  std::string notes = "grid of " + std::to_string(n) + " points, step " + format_number(step) + ", a_max " +
                      format_number(a_max) + "; min margin " + format_number(cert.min_margin) +
                      ", Lipschitz allowance " + format_number(0.5 * cert.lipschitz * step) + "; margin at a_max " +
                      format_number(cert.margin_at_edge);
  if (!cert.tail_engaged) notes += "; analytic tail not engaged below " + format_number(std::round(threshold * 100) / 100);
  cert.grid = make_record("H_T2 < 1 on grid", "H_T2(a) < 1 for 0 < a <= a_max", cert.max_value, 1.0,
                          cert.min_margin - 0.5 * cert.lipschitz * step, notes);
  if (cert.tail_engaged) {
    cert.tail = upper_bound_record(
        "H_T2 < 1 beyond a_max", "|R(a)| <= (64/pi) exp(-pi sqrt(a)/4) < 1 for a >= a_max, so H_T2 = 1 - 4(1-R)/(pi^2 a) < 1",
        optimistic_envelope(a_max), 1.0,
        "uses |h^(xi)| < exp(-xi/2), checked numerically on xi in [0.5, 60]; the conservative envelope " +
            std::string("from the strip estimate is below 1 for a > ") + format_number(conservative_threshold_closed_form()));
  }
  return cert;
}

}  // namespace ltcert

#include "ltcert/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "ltcert/specfun.hpp"

namespace ltcert {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point nodes (non-negative half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double lower;
  double upper;
  double value;
  double error;
  double abs_value;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const Integrand& f, double lower, double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {lower, upper, kronrod * half, std::fabs((kronrod - gauss) * half), abs_sum * std::fabs(half)};
}

// Repeated averaging of the last `depth` partial sums.
double euler_accelerate(const std::vector<double>& partial_sums, std::size_t depth) {
  depth = std::min(partial_sums.size(), depth);
  std::vector<double> row(partial_sums.end() - static_cast<std::ptrdiff_t>(depth), partial_sums.end());
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row.front();
}

}  // namespace

QuadratureRule gauss_legendre(int points, Interval domain) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.domain = domain;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const double mid = 0.5 * (domain.upper + domain.lower);
  const double half = 0.5 * (domain.upper - domain.lower);
  const int n = points;
  // P_n'(x) via the three-term recurrence
  auto legendre_derivative = [n](double x, double& pn) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    pn = p1;
    return n * (x * p1 - p0) / (x * x - 1.0);
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pn = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double derivative = legendre_derivative(x, pn);
      const double step = pn / derivative;
      x -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    const double derivative = legendre_derivative(x, pn);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = mid;
  return rule;
}

IntegralEstimate integrate_interval(const Integrand& f, Interval domain, double abs_tol,
                                    int max_subdivisions) {
  if (domain.upper == domain.lower) return {};
  std::priority_queue<Segment> heap;
  std::vector<Segment> settled;  // segments too narrow to bisect further
  const Segment first = kronrod15(f, domain.lower, domain.upper);
  double error = first.error;
  double abs_value = first.abs_value;
  heap.push(first);
  int evaluations = 15;
  int subdivisions = 0;
  while (!heap.empty() && error > std::max(abs_tol, 50.0 * kEps * abs_value)) {
    if (subdivisions >= max_subdivisions) {
      throw ConvergenceError("integrate_interval: error estimate " + std::to_string(error) +
                             " exceeds tolerance after subdivision cap");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (!(mid > worst.lower && mid < worst.upper)) {
      settled.push_back(worst);
      error -= worst.error;
      continue;
    }
    const Segment left = kronrod15(f, worst.lower, mid);
    const Segment right = kronrod15(f, mid, worst.upper);
    evaluations += 30;
    ++subdivisions;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }
  // totals from the leaves, free of accumulated update roundoff
  double value = 0.0;
  double total_error = 0.0;
  for (const Segment& s : settled) {
    value += s.value;
    total_error += s.error;
  }
  while (!heap.empty()) {
    value += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return {value, total_error, evaluations};
}

IntegralEstimate integrate_semi_infinite(const Integrand& f, SemiInfiniteStrategy strategy,
                                         double tol, OscillatoryOptions options) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_semi_infinite: tol must be positive");

  if (std::holds_alternative<SmoothDecay>(strategy)) {
    auto mapped = [&f](double t) {
      const double one_minus = 1.0 - t;
      const double x = t / one_minus;
      const double jacobian = 1.0 / (one_minus * one_minus);
      const double fx = f(x);
      return fx == 0.0 ? 0.0 : fx * jacobian;
    };
    return integrate_interval(mapped, {0.0, 1.0}, tol);
  }

  const double frequency = std::get<BesselOscillatory>(strategy).frequency;
  if (!(frequency > 0.0))
    throw std::invalid_argument("integrate_semi_infinite: oscillatory frequency must be positive");

  std::vector<double> partial_sums;
  double sum = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int quiet = 0;
  double lower = 0.0;
  const double panel_tol = 1e-3 * tol;
  for (int m = 1; m <= options.max_panels; ++m) {
    const double upper = bessel_j0_zero(m) / frequency;
    const IntegralEstimate panel = integrate_interval(f, {lower, upper}, panel_tol);
    sum += panel.value;
    error += panel.error;
    evaluations += panel.evaluations;
    partial_sums.push_back(sum);
    lower = upper;
    quiet = (std::fabs(panel.value) < 0.1 * tol) ? quiet + 1 : 0;
    if (quiet >= options.quiet_panels) {
      // averaging only spans the quiet panels, so it moves the sum by < tol/10
      const double accelerated =
          euler_accelerate(partial_sums, static_cast<std::size_t>(options.quiet_panels) + 1);
      const double total_error = error + std::fabs(accelerated - sum);
      if (total_error > tol) {
        throw ConvergenceError("integrate_semi_infinite: oscillatory error estimate exceeds tolerance");
      }
      return {accelerated, total_error, evaluations};
    }
  }
  throw ConvergenceError("integrate_semi_infinite: panel cap reached");
}

}  // namespace ltcert

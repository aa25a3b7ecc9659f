#pragma once

#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace ltcert {

/// Raised when an adaptive integrator cannot reach its tolerance within
/// its resource cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  double lower = -1.0;
  double upper = 1.0;
};

/// Fixed rule: sum_i weights[i] * f(nodes[i]) approximates the integral over domain.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval domain;

  template <typename F>
  double apply(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// L-point Gauss-Legendre rule on [lower, upper]; exact for polynomials of
/// degree <= 2L - 1.
QuadratureRule gauss_legendre(int points, Interval domain = {});

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. The target is
/// max(abs_tol, 50 eps * integral of |f|) so roundoff-limited integrals still
/// terminate.
IntegralEstimate integrate_interval(const Integrand& f, Interval domain, double abs_tol,
                                    int max_subdivisions = 4000);

struct SmoothDecay {};

/// Integrand of the form J0(frequency * r) * g(r); panels end at the zeros of J0.
struct BesselOscillatory {
  double frequency = 1.0;
};

using SemiInfiniteStrategy = std::variant<SmoothDecay, BesselOscillatory>;

struct OscillatoryOptions {
  int quiet_panels = 3;   // consecutive panels below tol/10 before stopping
  int max_panels = 200000;
};

/// Integral over [0, inf).
///
/// SmoothDecay maps x = t / (1 - t) onto [0, 1). BesselOscillatory integrates
/// panel by panel between consecutive zeros of J0(frequency r) and sums the
/// panels with Euler (repeated averaging) acceleration of the partial sums;
/// the integrand passed in must already include the J0 factor.
IntegralEstimate integrate_semi_infinite(const Integrand& f, SemiInfiniteStrategy strategy,
                                         double tol, OscillatoryOptions options = {});

}  // namespace ltcert

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace ltcert {

using Complex = std::complex<double>;

/// Raised when a special function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Digamma (order 0) or trigamma (order 1) at a complex argument.
///
/// Arguments with Re z < 1/2 are reflected; the result is then shifted
/// upward by the recurrence until |z| >= 12, where the asymptotic series
/// with Bernoulli numbers through B16 is summed. Relative accuracy is about
/// 1e-14 for |z| up to 1e6.
///
/// Throws PoleError at non-positive integers and std::invalid_argument for
/// orders other than 0 and 1.
Complex polygamma(int order, Complex z);

inline Complex digamma(Complex z) { return polygamma(0, z); }
inline Complex trigamma(Complex z) { return polygamma(1, z); }

/// Bessel function of the first kind of order zero.
///
/// Power series (extended precision) for |x| <= 16, Hankel asymptotic form
/// beyond. Absolute error below 1e-13 on [0, 1e3].
double bessel_j0(double x);

/// m-th positive zero of J0 (m >= 1): McMahon estimate refined by secant
/// iteration on bessel_j0.
double bessel_j0_zero(int m);

/// Crossover between the power series and the asymptotic form of bessel_j0.
inline constexpr double kBesselJ0Crossover = 16.0;

}  // namespace ltcert

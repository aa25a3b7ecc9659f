#include "ltcert/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShiftRadius = 12.0;

// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,    -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,   -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// e^{2 i w} for Im w >= 0, e^{-2 i w} otherwise: always of modulus <= 1.
Complex decaying_exponential(Complex w) {
  const Complex i{0.0, 1.0};
  return w.imag() >= 0.0 ? std::exp(2.0 * i * w) : std::exp(-2.0 * i * w);
}

// cot(w) without overflow for large |Im w|.
Complex stable_cot(Complex w) {
  const Complex i{0.0, 1.0};
  const Complex q = decaying_exponential(w);
  if (w.imag() >= 0.0) return i * (q + 1.0) / (q - 1.0);
  return i * (1.0 + q) / (1.0 - q);
}

// 1/sin^2(w) without overflow for large |Im w|.
Complex stable_csc2(Complex w) {
  const Complex q = decaying_exponential(w);
  const Complex d = (w.imag() >= 0.0) ? (q - 1.0) : (1.0 - q);
  return -4.0 * q / (d * d);
}

Complex digamma_asymptotic(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2;
  Complex series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / two_k * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series;
}

Complex trigamma_asymptotic(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2 * inv;
  Complex series = 0.0;
  for (double b : kBernoulli) {
    series += b * power;
    power *= inv2;
  }
  return inv + 0.5 * inv2 + series;
}

}  // namespace

Complex polygamma(int order, Complex z) {
  if (order != 0 && order != 1) throw std::invalid_argument("polygamma: order must be 0 or 1");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("polygamma: non-finite argument");
  if (is_pole(z)) throw PoleError("polygamma: pole at non-positive integer");

  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z);  psi'(z) = -psi'(1-z) + pi^2 / sin^2(pi z)
    const Complex reflected = polygamma(order, 1.0 - z);
    if (order == 0) return reflected - kPi * stable_cot(kPi * z);
    return -reflected + kPi * kPi * stable_csc2(kPi * z);
  }

  Complex shift = 0.0;
  while (std::abs(z) < kShiftRadius) {
    shift += (order == 0) ? 1.0 / z : 1.0 / (z * z);
    z += 1.0;
  }
  if (order == 0) return digamma_asymptotic(z) - shift;
  return trigamma_asymptotic(z) + shift;
}

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j0: non-finite argument");
  x = std::fabs(x);

  if (x <= kBesselJ0Crossover) {
    const long double q = -0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<long double>(k) * k);
      sum += term;
      if (std::fabs(term) < 1e-22L && k > x) break;
    }
    return static_cast<double>(sum);
  }

  // Hankel expansion: J0 = sqrt(2/(pi x)) (P cos chi - Q sin chi), a_k(0) signed.
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double xk = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    a *= -static_cast<double>((2 * k - 1) * (2 * k - 1)) / (8.0 * k);
    xk *= x;
    const double term = a / xk;
    if (std::fabs(term) >= previous) break;  // asymptotic series starts diverging
    previous = std::fabs(term);
    // k odd -> Q with sign (-1)^((k-1)/2); k even -> P with sign (-1)^(k/2)
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    } else {
      p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (previous < 1e-18) break;
  }
  const double chi = x - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j0_zero(int m) {
  if (m < 1) throw std::invalid_argument("bessel_j0_zero: index must be >= 1");
  const double beta = (m - 0.25) * kPi;
  const double e = 1.0 / (8.0 * beta);
  double x1 = beta + e - 124.0 / 3.0 * e * e * e;
  double x0 = x1 - 1e-3;
  double f0 = bessel_j0(x0);
  double f1 = bessel_j0(x1);
  for (int it = 0; it < 50 && f1 != f0; ++it) {
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = bessel_j0(x1);
    if (std::fabs(x1 - x0) < 4.0 * std::numeric_limits<double>::epsilon() * x1) break;
  }
  return x1;
}

}  // namespace ltcert

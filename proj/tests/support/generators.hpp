#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

// Seeded generators for property tests. Every test owns its own Gen so the
// draws do not depend on test order.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  // Uniform on a box, rejecting points within 0.1 of a non-positive integer.
  std::complex<double> complex_away_from_poles(double re_lo, double re_hi, double im_lo, double im_hi) {
    for (;;) {
      const std::complex<double> z(uniform(re_lo, re_hi), uniform(im_lo, im_hi));
      if (z.real() > 0.5 || std::abs(z - std::round(z.real())) > 0.1) return z;
    }
  }

  std::vector<double> coefficients(int degree, double scale = 1.0) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = scale * normal();
    return c;
  }

  // Uniform point on the sphere as (theta, phi).
  std::pair<double, double> sphere_point() {
    return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi)};
  }

 private:
  std::mt19937_64 rng_;
};

#pragma once

#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "ltcert/profile.hpp"
#include "ltcert/verification.hpp"

namespace ltcert {

// H_S2(a) = (4/pi) a^3 sum_{n>=1} (2n+1) / ((n(n+1))^2 + a^2)^2

enum class SeriesMethod { direct, closed_form, asymptotic };

std::string_view to_string(SeriesMethod m);

struct SphereSeriesEval {
  double a = 0.0;
  double value = 0.0;
  SeriesMethod method = SeriesMethod::direct;
  /// Rigorous bound on the truncation error (direct method only).
  double tail_bound = 0.0;
  /// |Im| of the assembled complex result (closed form only).
  double imag_residue = 0.0;
  long terms = 0;
};

/// Truncated shell sum. The cutoff N satisfies (4/pi) a^3 / (3 N^6) <= tol,
/// using (2n+1) / ((n(n+1))^2 + a^2)^2 <= 2 / n^7.
SphereSeriesEval h_s2_direct(double a, double tol = 1e-14);

/// Exact evaluation through digamma and trigamma.
///
/// With u_n = 1 / (n(n+1) - i a):
///   1 / (x^2 + a^2)^2 = -(u^2 + conj(u)^2) / (4 a^2) + (u - conj(u)) / (4 i a^3),
/// and n(n+1) - i a = (n - r1)(n - r2) with r1,2 = (-1 +- s)/2, s = sqrt(1 + 4 i a), gives
///   sum (2n+1) u_n^2 = (psi'(1 - r1) - psi'(1 - r2)) / s,
///   sum (2n+1) u_n   = -psi(1 - r1) - psi(1 - r2) + (real divergent part).
/// The conjugate terms are evaluated independently, so the imaginary part of
/// the assembled value measures roundoff.
SphereSeriesEval h_s2_closed_form(double a);

/// (4/pi) sum (2n+1) / (n(n+1))^4, the limit of H_S2(a) / a^3 as a -> 0.
double h_s2_small_a_coefficient();

/// sum_{n>=1} (2n+1) g(n(n+1) / a) for g(t) = (1 + t^2)^{-2}; equals (pi/4) a H_S2(a).
double sphere_shell_sum(double a, double tol = 1e-13);

/// g(0), g'(0), g''(0) and int_0^inf g for the profile g of a shell series
/// G(nu) = sum (2n+1) g(nu n(n+1)).
struct AsymptoticCoefficients {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double integral = 0.0;

  /// g(t) = (1 + t^2)^{-2}
  static AsymptoticCoefficients quartic_decay() { return {1.0, 0.0, -4.0, std::numbers::pi / 4.0}; }
};

/// integral / nu - (2/3) g0 - (1/15) nu g1 + (4/315) nu^2 g2.
double spectral_expansion(const AsymptoticCoefficients& c, double nu);

/// Limit of (H_S2(a) - 1 + 8/(3 pi a)) a^3 as a -> inf.
inline constexpr double kSphereRemainderLimit = -64.0 / (315.0 * std::numbers::pi);

struct RemainderPoint {
  double a = 0.0;
  double h = 0.0;
  double remainder_scaled = 0.0;  // (H - 1 + 8/(3 pi a)) a^3
};

/// Requires every a >= 1.
std::vector<RemainderPoint> remainder_curve(std::span<const double> a_grid, int threads = 1);

/// ||chi^E(., s)||^2 = (1/4pi) sum (2n+1) (1 - f(E / n(n+1)))^2, summed directly.
double chi_kernel_norm_sq(double energy, const BudgetProfile& p = BudgetProfile::normalized(),
                          double tol = 1e-15);

struct SphereCertificate {
  VerificationRecord grid;  // H < 1 on (0, a_max]
  VerificationRecord tail;  // H < 1 beyond a_max via the asymptotic expansion
  double max_value = 0.0;
  double min_margin = 0.0;      // min over grid of 1 - H
  double margin_at_edge = 0.0;  // 1 - H(a_max)
  double lipschitz = 0.0;       // 2 x max finite-difference slope
  double remainder_constant = 0.0;

  RecordSet records() const { return {grid, tail}; }
};

/// Grid certification of H_S2 < 1 at a = step, 2 step, ..., a_max plus a
/// Lipschitz allowance between grid points, and an asymptotic certificate
/// for a > a_max whose remainder constant is measured on [a_max, 4 a_max].
SphereCertificate certify_below_one_sphere(double a_max = 40.0, double step = 0.01, int threads = 1);

}  // namespace ltcert

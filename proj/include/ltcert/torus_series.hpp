#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "ltcert/verification.hpp"

namespace ltcert {

// H_T2(a) = (4/pi^2) a^3 sum_{k in Z^2 \ 0} 1 / (|k|^4 + a^2)^2

struct Shell {
  std::int64_t norm = 0;   // m = |k|^2
  std::int64_t count = 0;  // r2(m) > 0
};

/// Multiplicities r2(m) of |k|^2 = m over Z^2 \ {0} for 1 <= m <= max_norm,
/// built once by enumeration and read-only afterwards.
class LatticeShellTable {
 public:
  /// Throws std::invalid_argument for M < 1 and std::length_error when M
  /// exceeds kMaxNorm.
  explicit LatticeShellTable(std::int64_t max_norm);

  static constexpr std::int64_t kMaxNorm = 400'000'000;

  std::int64_t max_norm() const { return max_norm_; }
  /// Non-empty shells in increasing norm.
  const std::vector<Shell>& shells() const { return shells_; }
  std::int64_t r2(std::int64_t m) const;
  /// Number of lattice points with 0 < |k|^2 <= max_norm.
  std::int64_t point_count() const { return cumulative_.empty() ? 0 : cumulative_.back(); }
  /// j-th (1-based) term of the non-decreasing list of |k|^2; j <= point_count().
  std::int64_t lambda(std::int64_t j) const;

 private:
  std::int64_t max_norm_;
  std::vector<Shell> shells_;
  std::vector<std::int64_t> cumulative_;
};

/// Rigorous bound on sum_{|k|^2 > M} |k|^{-8}: unit squares centred at the
/// omitted points lie in |x| > sqrt(M) - 1/sqrt(2) and |k| >= |x| - 1/sqrt(2), so
/// the sum is at most 2 pi [ (K - sqrt2)^{-6} / 6 + (K - sqrt2)^{-7} / (7 sqrt2) ], K = sqrt(M).
double lattice_tail_bound(std::int64_t max_norm);

/// Smallest M whose tail bound scaled by `scale` is <= tol.
std::int64_t shell_cutoff(double scale, double tol);

struct TorusSeriesEval {
  double a = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t max_norm = 0;
};

/// Shell-summed H_T2(a) using `table` (which must reach the cutoff for tol).
TorusSeriesEval h_t2_direct(double a, double tol, const LatticeShellTable& table);
/// Convenience overload that builds a table sized for this evaluation.
TorusSeriesEval h_t2_direct(double a, double tol = 1e-12);

/// H_T2 by raw enumeration of k over the square |k1|,|k2| <= K (test oracle
/// for shell summation); no tail.
double h_t2_enumerated_partial(double a, std::int64_t max_norm);

inline constexpr double kStripAlpha = 1.0 / 4.6;
inline constexpr double kStripB = 4.75;

/// (2^{3/2} b / alpha^2) exp(-alpha pi sqrt(a) / 2) with alpha = 1/4.6, b = 4.75.
double conservative_envelope(double a);
/// (64/pi) exp(-pi sqrt(a) / 4), from |h^(xi)| < exp(-xi/2) and lambda_j >= j/4.
double optimistic_envelope(double a);
/// [(2/(alpha pi)) log(2^{3/2} b / alpha^2)]^2
double conservative_threshold_closed_form();
/// [(4/pi) log(64/pi)]^2
double optimistic_threshold_closed_form();
/// a where envelope(a) = 1, by bisection.
double envelope_crossing(double (*envelope)(double));

struct RemainderEstimate {
  double a = 0.0;
  double R = 0.0;
  double conservative_bound = 0.0;
  double optimistic_bound = 0.0;
};

/// R(a) = sum_{k != 0} ((|k|^2/a)^2 + 1)^{-2} + 1 - pi^2 a / 4 from the direct
/// lattice sum; equivalently H_T2 = 1 - (4/(pi^2 a)) (1 - R).
RemainderEstimate poisson_remainder(double a, const LatticeShellTable& table, double tol = 1e-12);
RemainderEstimate poisson_remainder(double a);

/// Radial Fourier transform h^(xi) = int_0^inf J0(xi r) r / (r^4 + 1)^2 dr by
/// Bessel-zero panel quadrature (plain semi-infinite quadrature at xi = 0).
double hankel_hhat(double xi, double tol = 1e-10);

/// R(a) from the transform side, 2 pi a sum_{k != 0} h^(2 pi sqrt(a) |k|).
double poisson_remainder_spectral(double a, const LatticeShellTable& table, double tol = 1e-10);

/// Coefficients (ascending powers of t) of
/// P(t) = (t^2 - 12 a^2 t + 4 a^4 + 1)^2 - 32 a^2 t (t - 2 a^2)^2 - (t^4 + 1)/b.
std::vector<double> strip_polynomial(double alpha, double b);

struct StripCertificate {
  VerificationRecord grid;     // P > 0 on [0, t_max]
  VerificationRecord leading;  // P > 0 on [t_max, inf)
  double min_sample = 0.0;
  std::int64_t intervals = 0;

  RecordSet records() const { return {grid, leading}; }
  bool pass() const { return grid.pass && leading.pass; }
};

/// Samples P on a uniform grid of [0, t_max], bounding P on each cell by
/// P(t0) - h max|P'| and bisecting cells whose bound is not positive; the
/// tail t > t_max is covered by c4 - sum_{i<4} |c_i| t_max^{i-4} > 0.
StripCertificate strip_inequality_check(double alpha = kStripAlpha, double b = kStripB,
                                        double t_max = 1e4);

/// sum_{j>=1} exp(-2 L sqrt j) <= exp(-L) 2 / L^2; computed = left side.
VerificationRecord tail_chain_check(double L);

/// Left side alone: sum_{j>=1} exp(-2 L sqrt j) with an integral tail bound.
double tail_chain_sum(double L);

struct TorusCertificate {
  VerificationRecord grid;
  VerificationRecord tail;  // present iff tail_engaged
  bool tail_engaged = false;
  double max_value = 0.0;
  double min_margin = 0.0;
  double margin_at_edge = 0.0;
  double lipschitz = 0.0;

  RecordSet records() const;
};

/// Grid certification of H_T2 < 1 on (0, a_max], plus the remainder
/// certificate beyond a_max when a_max >= the optimistic threshold.
TorusCertificate certify_below_one_torus(double a_max = 50.0, double step = 0.01, int threads = 1);

}  // namespace ltcert

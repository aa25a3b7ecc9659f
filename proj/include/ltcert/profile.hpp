#pragma once

#include <functional>
#include <numbers>

namespace ltcert {

/// Spectral filter f(t) = 1 / (1 + mu t^2) that splits a function into its
/// low-energy part and a remainder.
struct BudgetProfile {
  double mu = std::numbers::pi * std::numbers::pi / 16.0;

  /// The normalized member of the family, mu = pi^2 / 16.
  static BudgetProfile normalized() { return {}; }

  template <typename Scalar>
  Scalar operator()(Scalar t) const {
    return Scalar(1) / (Scalar(1) + Scalar(mu) * t * t);
  }
};

/// f(t) for t >= 0. Throws std::invalid_argument for negative t or mu <= 0.
double f_eval(const BudgetProfile& p, double t);

/// A quantity computed by a closed form and independently by quadrature.
struct CrossChecked {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double discrepancy() const;
};

/// int_0^inf f(t)^2 dt - 1; closed form (pi/4) mu^{-1/2} - 1.
CrossChecked normalization_residual(const BudgetProfile& p);

/// pi * int_0^inf (1 - f(t))^2 t^{-2} dt; closed form pi^2 sqrt(mu) / 4.
CrossChecked objective_value(const BudgetProfile& p);

/// pi * int_0^inf (1 - g(t))^2 t^{-2} dt for an arbitrary profile g with g(0) = 1.
double objective_of(const std::function<double(double)>& g, double tol = 1e-12);

/// int_0^inf g(t)^2 dt.
double squared_norm_of(const std::function<double(double)>& g, double tol = 1e-12);

/// Constant A in the remainder-kernel bound ||chi^E||^2 < A E: sqrt(mu) / 16
/// (pi/64 for the normalized profile).
double induced_A(const BudgetProfile& p);

struct ProfileReport {
  double mu = 0.0;
  double normalization_residual = 0.0;
  double objective_value = 0.0;
  double induced_A = 0.0;
};

ProfileReport profile_report(const BudgetProfile& p);

/// The mu that zeroes the normalization residual, found by bisection on the
/// quadrature route.
double normalizing_mu();

/// Relative deviation of int_0^inf (sqrt(rho) - sqrt(A E))_+^2 dE (quadrature)
/// from rho^2 / (6 A). Returns 0 for rho == 0.
double integral_identity_check(double rho, double A);

/// The quadrature value alone, int_0^inf (sqrt(rho) - sqrt(A E))_+^2 dE.
double positive_part_integral(double rho, double A);

}  // namespace ltcert

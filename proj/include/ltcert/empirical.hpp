#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltcert/family.hpp"
#include "ltcert/profile.hpp"
#include "ltcert/verification.hpp"

namespace ltcert {

class OrthonormalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// rho(x) = sum_j |u_j(x)|^2 on the family's natural grid.
struct DensityField {
  bool sphere = true;
  Eigen::VectorXd values;
  Eigen::VectorXd weights;

  double integral() const { return weights.dot(values); }
  double squared_integral() const { return weights.dot(values.cwiseAbs2()); }
};

DensityField density(const OrthonormalFamily& family);
DensityField density(const OrthonormalFamily& family, const FamilySamples& basis);

/// 3 pi/32 for scalar and single-kind vector families, 3 pi/16 for mixed
/// vector families, and (long side / short side) 3 pi/32 on a torus.
double lt_bound(const OrthonormalFamily& family);

struct LtReport {
  std::string family;
  std::size_t members = 0;
  double rho_integral = 0.0;
  double rho_sq_integral = 0.0;
  double dirichlet_sum = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  double gram_residual = 0.0;
};

inline constexpr double kOrthonormalityTolerance = 1e-10;

/// int rho^2 by quadrature over the Dirichlet sum from spectral data. Throws
/// OrthonormalityError when the Gram residual exceeds 1e-10.
LtReport lt_ratio(const OrthonormalFamily& family);

struct SemiclassicalPoint {
  int N = 0;
  double ratio = 0.0;
  double closed_form = 0.0;  // (N^2 - 1) / (2 pi N^2)
  double gap = 0.0;          // 1/(2 pi) - ratio
};

/// lt_ratio of sphere-scalar(N) for N = 2..N_max.
std::vector<SemiclassicalPoint> semiclassical_sequence(int N_max, int threads = 1);

struct ElongatedReport {
  double alpha = 0.0;
  LtReport report;          // normalized sin(alpha x1) as a one-member family
  double l4_fourth = 0.0;   // int sin^4(alpha x1)
  double l2_sq = 0.0;       // int sin^2(alpha x1)
  double h1_sq = 0.0;       // int |grad sin(alpha x1)|^2
  double quadrature_ratio = 0.0;  // l4_fourth / (l2_sq h1_sq)
  double closed_form = 0.0;       // 3 / (8 pi^2 alpha)
};

/// sin(alpha x1) on [0, 2 pi/alpha) x [0, 2 pi). Requires 0 < alpha <= 1.
ElongatedReport elongated_ratio(double alpha);

struct LiftCheck {
  int copies = 1;
  double gram_residual = 0.0;  // lifted family on the square torus
  double rho_sq_original = 0.0;
  double rho_sq_lifted = 0.0;
  double dirichlet_original = 0.0;
  double dirichlet_lifted = 0.0;  // by quadrature of the lifted gradients
  double ratio_original = 0.0;
  double ratio_lifted = 0.0;
  VerificationRecord record;
};

/// Lifts a family on [0, 2 pi/alpha) x [0, 2 pi) to the square of side
/// 2 pi/alpha; copies = 1/alpha must be an integer (std::invalid_argument
/// otherwise). Checks orthonormality, int rho~^2 = alpha int rho^2 and equal
/// Dirichlet sums, all to 1e-10.
LiftCheck periodic_lift_check(const OrthonormalFamily& family);

/// For every E: the remainder-kernel series equals (a/16) H_S2(a) at
/// a = pi E/4 (to 1e-10), and lies strictly below A E with A = pi/64.
RecordSet chi_bound_check(std::span<const double> energies);

struct PipelineDetail {
  double min_pointwise_slack = 0.0;   // min of sum|psi^E|^2 - (sqrt rho - sqrt(AE))_+^2
  double max_energy_deviation = 0.0;  // max_j | ||grad psi_j||^2 - int ||psi_j^E||^2 dE |
};

/// psi^E = f(E / (-Delta)) psi for a scalar sphere family. Checks the
/// pointwise inequality at every grid point and every E, and the energy
/// identity ||grad psi_j||^2 = int_0^inf ||psi_j^E||^2 dE (gradient norms by
/// quadrature, the E-integral by semi-infinite quadrature) to 1e-8.
RecordSet pipeline_consistency(const OrthonormalFamily& family, std::span<const double> energies,
                               const BudgetProfile& profile = BudgetProfile::normalized(),
                               PipelineDetail* detail = nullptr);

/// sum_k Y_n^k(s)^2 = (2n+1)/(4 pi) for n <= scalar_degree and
/// sum_k |w_n^k(s)|^2 = sum_k |v_n^k(s)|^2 = (2n+1)/(4 pi) for 1 <= n <= vector_degree,
/// at `points` pseudo-random points; both records use tolerance 1e-10.
RecordSet addition_theorem_check(int scalar_degree = 20, int vector_degree = 10, int points = 100,
                                 unsigned seed = 7);

}  // namespace ltcert

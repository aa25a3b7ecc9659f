#include "ltcert/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ltcert/parallel.hpp"
#include "ltcert/quadrature.hpp"
#include "ltcert/sphere_series.hpp"

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTheoremConstant = 3.0 * kPi / 32.0;

// Row-wise |.|^2 summed over components and members.
Eigen::VectorXd pointwise_density(const Eigen::MatrixXcd& members, std::size_t points, int components) {
  const Eigen::VectorXd per_row = members.cwiseAbs2().rowwise().sum();
  return per_row.reshaped(components, static_cast<Eigen::Index>(points)).colwise().sum().transpose();
}

}  // namespace

DensityField density(const OrthonormalFamily& family) { return density(family, family.sample_basis()); }

DensityField density(const OrthonormalFamily& family, const FamilySamples& basis) {
  DensityField out;
  out.sphere = family.on_sphere();
  out.values = pointwise_density(family.member_values(basis), basis.points, basis.components);
  out.weights = basis.weights;
  return out;
}

double lt_bound(const OrthonormalFamily& family) {
  switch (family.kind()) {
    case FamilyKind::sphere_mixed: return 2.0 * kTheoremConstant;
    case FamilyKind::torus: {
      const TorusDomain& d = family.torus_domain();
      return TorusDomain{d.L1, d.L2 * family.lift_copies()}.aspect() * kTheoremConstant;
    }
    default: return kTheoremConstant;
  }
}

LtReport lt_ratio(const OrthonormalFamily& family) {
  const FamilySamples basis = family.sample_basis();
  const Eigen::MatrixXcd members = family.member_values(basis);
  const Eigen::VectorXd row_weights = basis.weights.replicate(1, basis.components).transpose().reshaped();
  const Eigen::MatrixXcd gram = members.adjoint() * row_weights.asDiagonal() * members;
  LtReport r;
  r.family = family.descriptor();
  r.members = static_cast<std::size_t>(family.size());
  r.gram_residual = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (r.gram_residual > kOrthonormalityTolerance)
    throw OrthonormalityError("lt_ratio: Gram residual " + format_number(r.gram_residual) + " exceeds tolerance");
  DensityField rho;
  rho.sphere = family.on_sphere();
  rho.values = pointwise_density(members, basis.points, basis.components);
  rho.weights = basis.weights;
  r.rho_integral = rho.integral();
  r.rho_sq_integral = rho.squared_integral();
  r.dirichlet_sum = family.dirichlet_sum();
  r.ratio = r.rho_sq_integral / r.dirichlet_sum;
  r.bound = lt_bound(family);
  r.margin = r.bound - r.ratio;
  return r;
}

std::vector<SemiclassicalPoint> semiclassical_sequence(int N_max, int threads) {
  if (N_max < 2) throw std::invalid_argument("semiclassical_sequence: N_max must be >= 2");
  return parallel_map<SemiclassicalPoint>(
      static_cast<std::size_t>(N_max - 1),
      [](std::size_t i) {
        const int N = static_cast<int>(i) + 2;
        const double n2 = double(N) * N;
        SemiclassicalPoint p;
        p.N = N;
        p.ratio = lt_ratio(build_family(SphereScalarSpec{N})).ratio;
        p.closed_form = (n2 - 1.0) / (2.0 * kPi * n2);
        p.gap = 1.0 / (2.0 * kPi) - p.ratio;
        return p;
      },
      threads);
}

ElongatedReport elongated_ratio(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("elongated_ratio: alpha must lie in (0, 1]");
  const TorusDomain domain = TorusDomain::elongated(alpha);
  const OrthonormalFamily modes = build_family(TorusSpec{domain, {{1, 0}, {-1, 0}}});
  // sin = (e^{i a x} - e^{-i a x}) / 2i
  Eigen::MatrixXcd c(1, 2);
  c << std::complex<double>(0.0, -1.0 / std::numbers::sqrt2), std::complex<double>(0.0, 1.0 / std::numbers::sqrt2);
  const OrthonormalFamily family =
      modes.with_coefficients(c, "torus sin(alpha x1), alpha " + format_number(alpha));

  ElongatedReport out;
  out.alpha = alpha;
  out.report = lt_ratio(family);
  const TorusGrid grid = TorusGrid::for_max_frequency(domain, 1, 0);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double w = grid.weights()(static_cast<Eigen::Index>(p));
    const double s = std::sin(alpha * grid.points()[p].x1);
    const double g = alpha * std::cos(alpha * grid.points()[p].x1);
    out.l4_fourth += w * s * s * s * s;
    out.l2_sq += w * s * s;
    out.h1_sq += w * g * g;
  }
  out.quadrature_ratio = out.l4_fourth / (out.l2_sq * out.h1_sq);
  out.closed_form = 3.0 / (8.0 * kPi * kPi * alpha);
  return out;
}

LiftCheck periodic_lift_check(const OrthonormalFamily& family) {
  if (family.kind() != FamilyKind::torus || family.lift_copies() != 1)
    throw std::invalid_argument("periodic_lift_check: needs an unlifted torus family");
  const TorusDomain& d = family.torus_domain();
  const double ratio = d.L1 / d.L2;
  const long copies = std::lround(ratio);
  if (copies < 1 || std::fabs(ratio - static_cast<double>(copies)) > 1e-12 * ratio)
    throw std::invalid_argument("periodic_lift_check: 1/alpha must be a positive integer");
  const double alpha = 1.0 / static_cast<double>(copies);
  const OrthonormalFamily lifted = periodic_lift(family, static_cast<int>(copies));

  LiftCheck out;
  out.copies = static_cast<int>(copies);
  const LtReport original = lt_ratio(family);
  out.gram_residual = gram_residual(lifted);
  out.rho_sq_original = original.rho_sq_integral;
  out.rho_sq_lifted = density(lifted).squared_integral();
  out.dirichlet_original = original.dirichlet_sum;
  const FamilySamples grads = lifted.sample_basis_gradients();
  out.dirichlet_lifted = density(lifted, grads).integral();
  out.ratio_original = original.ratio;
  out.ratio_lifted = out.rho_sq_lifted / out.dirichlet_lifted;

  const double tol = 1e-10;
  const double rho_dev = std::fabs(out.rho_sq_lifted - alpha * out.rho_sq_original) / std::max(1.0, out.rho_sq_lifted);
  const double dir_dev = std::fabs(out.dirichlet_lifted - out.dirichlet_original) / std::max(1.0, out.dirichlet_original);
  const double worst = std::max({out.gram_residual, rho_dev, dir_dev});
  out.record = make_record("periodic lift, alpha = " + format_number(alpha),
                           "lifted family orthonormal, int rho~^2 = alpha int rho^2, Dirichlet sums equal",
                           worst, tol, tol - worst,
                           "Gram residual " + format_number(out.gram_residual) + ", rho^2 deviation " +
                               format_number(rho_dev) + ", Dirichlet deviation " + format_number(dir_dev) +
                               "; ratio " + format_number(out.ratio_original) + " = (1/alpha) x " +
                               format_number(out.ratio_lifted));
  return out;
}

RecordSet chi_bound_check(std::span<const double> energies) {
  if (energies.empty()) throw std::invalid_argument("chi_bound_check: empty energy grid");
  const BudgetProfile profile = BudgetProfile::normalized();
  const double A = induced_A(profile);
  double worst_link = 0.0;
  double worst_ratio = 0.0;
  double worst_e = energies.front();
  for (double e : energies) {
    if (!(e > 0.0)) throw std::invalid_argument("chi_bound_check: energies must be positive");
    const double series = chi_kernel_norm_sq(e, profile);
    const double a = kPi * e / 4.0;
    const double link = a / 16.0 * h_s2_direct(a, 1e-15).value;
    worst_link = std::max(worst_link, std::fabs(series - link) / std::max(1.0, series));
    if (series / (A * e) > worst_ratio) {
      worst_ratio = series / (A * e);
      worst_e = e;
    }
  }
  const std::string grid = std::to_string(energies.size()) + " energies in [" +
                           format_number(*std::min_element(energies.begin(), energies.end())) + ", " +
                           format_number(*std::max_element(energies.begin(), energies.end())) + "]";
  return {agreement_record("remainder kernel series = (a/16) H_S2(a)",
                           "(1/4pi) sum (2n+1)(1 - f(E/n(n+1)))^2 = (a/16) H_S2(a), a = pi E/4", worst_link, 0.0,
                           1e-10, grid + "; largest relative deviation"),
          upper_bound_record("remainder kernel series < A E", "||chi^E||^2 < (pi/64) E", worst_ratio, 1.0,
                             grid + "; computed is the largest ratio series / (A E), at E = " +
                                 format_number(worst_e))};
}

RecordSet pipeline_consistency(const OrthonormalFamily& family, std::span<const double> energies,
                               const BudgetProfile& profile, PipelineDetail* detail) {
  if (family.kind() != FamilyKind::sphere_scalar)
    throw std::invalid_argument("pipeline_consistency: scalar sphere families only");
  if (energies.empty()) throw std::invalid_argument("pipeline_consistency: empty energy grid");
  const double A = induced_A(profile);
  const FamilySamples basis = family.sample_basis();
  const Eigen::VectorXd rho = pointwise_density(family.member_values(basis), basis.points, 1);
  const Eigen::VectorXd& lambda = family.eigenvalues();

  double min_slack = std::numeric_limits<double>::infinity();
  for (double e : energies) {
    if (!(e > 0.0)) throw std::invalid_argument("pipeline_consistency: energies must be positive");
    const Eigen::VectorXd filter = lambda.unaryExpr([&](double l) { return profile(e / l); });
    const Eigen::MatrixXcd filtered = basis.values * filter.asDiagonal() * family.coefficients().transpose();
    const Eigen::VectorXd low = pointwise_density(filtered, basis.points, 1);
    for (Eigen::Index p = 0; p < rho.size(); ++p) {
      const double gap = std::max(0.0, std::sqrt(rho(p)) - std::sqrt(A * e));
      min_slack = std::min(min_slack, low(p) - gap * gap);
    }
  }

  // ||grad psi_j||^2 by quadrature of the sampled gradients
  const FamilySamples grads = family.sample_basis_gradients();
  const Eigen::MatrixXcd g = family.member_values(grads);
  const Eigen::VectorXd row_weights = grads.weights.replicate(1, 2).transpose().reshaped();
  const Eigen::VectorXd grad_norms = (row_weights.asDiagonal() * g.cwiseAbs2()).colwise().sum().transpose();
  const Eigen::MatrixXd c2 = family.coefficients().cwiseAbs2();
  double max_dev = 0.0;
  for (Eigen::Index j = 0; j < family.size(); ++j) {
    auto energy_norm = [&](double e) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        const double f = profile(e / lambda(i));
        s += c2(j, i) * f * f;
      }
      return s;
    };
    const double integral = integrate_semi_infinite(energy_norm, SmoothDecay{}, 1e-11).value;
    max_dev = std::max(max_dev, std::fabs(integral - grad_norms(j)));
  }
  if (detail) *detail = {min_slack, max_dev};

  const double pointwise_tol = 1e-12;
  return {make_record("pointwise low-energy lower bound, " + family.descriptor(),
                      "sum_j |psi_j^E(s)|^2 >= (sqrt(rho(s)) - sqrt(A E))_+^2 at every grid point", min_slack, 0.0,
                      min_slack + pointwise_tol,
                      std::to_string(basis.points) + " points x " + std::to_string(energies.size()) +
                          " energies; computed is the smallest slack, roundoff allowance " +
                          format_number(pointwise_tol)),
          agreement_record("energy identity, " + family.descriptor(),
                           "||grad psi_j||^2 = int_0^inf ||psi_j^E||^2 dE for every member", max_dev, 0.0, 1e-8,
                           "computed is the largest deviation over " + std::to_string(family.size()) + " members")};
}

RecordSet addition_theorem_check(int scalar_degree, int vector_degree, int points, unsigned seed) {
  if (scalar_degree < 0 || vector_degree < 1 || points < 1)
    throw std::invalid_argument("addition_theorem_check: need degrees >= 0 (vector >= 1) and points >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double scalar_dev = 0.0;
  double vector_dev = 0.0;
  const int n_max = std::max(scalar_degree, vector_degree);
  for (int i = 0; i < points; ++i) {
    const SpherePoint s{std::acos(unit(rng)), kPi * (unit(rng) + 1.0)};
    const Eigen::VectorXd y = eval_all_ylm(n_max, s);
    const auto g = eval_all_grad_ylm(n_max, s);
    for (int n = 0; n <= n_max; ++n) {
      const double expected = (2.0 * n + 1.0) / (4.0 * kPi);
      const auto rows = Eigen::seqN(harmonic_index(n, 1), 2 * n + 1);
      if (n <= scalar_degree) scalar_dev = std::max(scalar_dev, std::fabs(y(rows).squaredNorm() - expected));
      if (n >= 1 && n <= vector_degree) {
        // |w|^2 = |v|^2 = |grad Y|^2 / (n(n+1)) pointwise
        double w = 0.0;
        double v = 0.0;
        for (int k = 1; k <= 2 * n + 1; ++k) {
          const Tangent grad = g.row(harmonic_index(n, k)).transpose();
          w += eval_vector_field_from_gradient(grad, n, VectorKind::w).squaredNorm();
          v += eval_vector_field_from_gradient(grad, n, VectorKind::v).squaredNorm();
        }
        vector_dev = std::max({vector_dev, std::fabs(w - expected), std::fabs(v - expected)});
      }
    }
  }
  const std::string where = std::to_string(points) + " pseudo-random points, seed " + std::to_string(seed);
  return {agreement_record("scalar addition theorem, n <= " + std::to_string(scalar_degree),
                           "sum_k Y_n^k(s)^2 = (2n+1)/(4 pi)", scalar_dev, 0.0, 1e-10,
                           where + "; computed is the largest deviation"),
          agreement_record("vector addition theorem, n <= " + std::to_string(vector_degree),
                           "sum_k |w_n^k(s)|^2 = sum_k |v_n^k(s)|^2 = (2n+1)/(4 pi)", vector_dev, 0.0, 1e-10,
                           where + "; computed is the largest deviation")};
}

}  // namespace ltcert

#include "ltcert/harmonics.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ltcert/quadrature.hpp"

namespace ltcert {

namespace {

constexpr double kPi = std::numbers::pi;

void check_harmonic(int n, int k) {
  if (n < 0 || k < 1 || k > 2 * n + 1) throw std::invalid_argument("harmonic: need n >= 0 and 1 <= k <= 2n+1");
}

void check_guard(double sin_theta) {
  if (sin_theta < kPoleGuard) throw PoleGuardError("gradient requested inside the pole guard band");
}

// (cos, sin)(j phi) for j = 0..n_max.
std::pair<Eigen::VectorXd, Eigen::VectorXd> trig_table(int n_max, double phi) {
  Eigen::VectorXd c(n_max + 1), s(n_max + 1);
  for (int j = 0; j <= n_max; ++j) {
    c(j) = std::cos(j * phi);
    s(j) = std::sin(j * phi);
  }
  return {c, s};
}

}  // namespace

SphereGrid::SphereGrid(int L) : L_(L) {
  if (L < 1) throw std::invalid_argument("SphereGrid: L must be >= 1");
  const QuadratureRule rule = gauss_legendre(L, {-1.0, 1.0});
  const int n_phi = 2 * L;
  const double dphi = 2.0 * kPi / n_phi;
  points_.reserve(static_cast<std::size_t>(L) * n_phi);
  weights_.resize(static_cast<Eigen::Index>(L) * n_phi);
  Eigen::Index idx = 0;
  for (int i = 0; i < L; ++i) {
    const double theta = std::acos(rule.nodes[i]);
    for (int j = 0; j < n_phi; ++j) {
      points_.push_back({theta, j * dphi});
      weights_(idx++) = rule.weights[i] * dphi;
    }
  }
}

LegendreTable::LegendreTable(int n_max, double theta)
    : n_max_(n_max), sin_theta_(std::sin(theta)), p_(Eigen::MatrixXd::Zero(n_max + 2, n_max + 2)) {
  if (n_max < 0) throw std::invalid_argument("LegendreTable: n_max must be >= 0");
  const double x = std::cos(theta);
  const double s = sin_theta_;
  const int top = n_max + 1;
  p_(0, 0) = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 1; m <= top; ++m) p_(m, m) = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * p_(m - 1, m - 1);
  for (int m = 0; m < top; ++m) p_(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * p_(m, m);
  for (int m = 0; m <= top; ++m) {
    for (int n = m + 2; n <= top; ++n) {
      const double nn = n, mm = m;
      const double a = std::sqrt((4.0 * nn * nn - 1.0) / (nn * nn - mm * mm));
      const double b = std::sqrt(((nn - 1.0) * (nn - 1.0) - mm * mm) / (4.0 * (nn - 1.0) * (nn - 1.0) - 1.0));
      p_(n, m) = a * (x * p_(n - 1, m) - b * p_(n - 2, m));
    }
  }
  if (s < kPoleGuard) return;
  // (1 - x^2) dP/dx = (n+1) x P_n^m - (n-m+1) P_{n+1}^m, normalized and with d/dtheta = -sin d/dx
  dp_ = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double nn = n, mm = m;
      const double c = std::sqrt((2.0 * nn + 1.0) * (nn + 1.0 + mm) * (nn + 1.0 - mm) / (2.0 * nn + 3.0));
      dp_(n, m) = -((nn + 1.0) * x * p_(n, m) - c * p_(n + 1, m)) / s;
    }
  }
}

double LegendreTable::dtheta(int n, int m) const {
  check_guard(sin_theta_);
  return dp_(n, m);
}

double eval_ylm(const ScalarHarmonic& h, const SpherePoint& s) {
  check_harmonic(h.degree, h.order);
  return eval_all_ylm(h.degree, s)(harmonic_index(h.degree, h.order));
}

Tangent eval_grad_ylm(const ScalarHarmonic& h, const SpherePoint& s) {
  check_harmonic(h.degree, h.order);
  return eval_all_grad_ylm(h.degree, s).row(harmonic_index(h.degree, h.order)).transpose();
}

Eigen::VectorXd eval_all_ylm(int n_max, const SpherePoint& s) {
  const LegendreTable leg(n_max, s.theta);
  const auto [c, sn] = trig_table(n_max, s.phi);
  Eigen::VectorXd out((n_max + 1) * (n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    out(harmonic_index(n, 1)) = leg.value(n, 0);
    for (int j = 1; j <= n; ++j) {
      out(harmonic_index(n, 2 * j)) = std::numbers::sqrt2 * leg.value(n, j) * c(j);
      out(harmonic_index(n, 2 * j + 1)) = std::numbers::sqrt2 * leg.value(n, j) * sn(j);
    }
  }
  return out;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> eval_all_grad_ylm(int n_max, const SpherePoint& s) {
  const double sin_theta = std::sin(s.theta);
  check_guard(sin_theta);
  const LegendreTable leg(n_max, s.theta);
  const auto [c, sn] = trig_table(n_max, s.phi);
  Eigen::Matrix<double, Eigen::Dynamic, 2> out((n_max + 1) * (n_max + 1), 2);
  for (int n = 0; n <= n_max; ++n) {
    out.row(harmonic_index(n, 1)) << leg.dtheta(n, 0), 0.0;
    for (int j = 1; j <= n; ++j) {
      const double r2 = std::numbers::sqrt2;
      const double dp = r2 * leg.dtheta(n, j);
      const double p_over_s = r2 * leg.value(n, j) / sin_theta;
      out.row(harmonic_index(n, 2 * j)) << dp * c(j), -j * p_over_s * sn(j);
      out.row(harmonic_index(n, 2 * j + 1)) << dp * sn(j), j * p_over_s * c(j);
    }
  }
  return out;
}

Tangent eval_vector_field(const VectorEigenfield& f, const SpherePoint& s) {
  if (f.degree < 1) throw std::invalid_argument("eval_vector_field: degree must be >= 1");
  const Tangent g = eval_grad_ylm({f.degree, f.order}, s) / std::sqrt(f.degree * (f.degree + 1.0));
  return f.kind == VectorKind::w ? perp(g) : g;
}

TorusDomain TorusDomain::elongated(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("TorusDomain::elongated: alpha must be positive");
  return {2.0 * kPi / alpha, 2.0 * kPi};
}

double TorusDomain::aspect() const { return std::max(L1, L2) / std::min(L1, L2); }

namespace {

Eigen::Vector2d frequency(const TorusDomain& d, const TorusMode& m) {
  if (m.k1 == 0 && m.k2 == 0) throw std::invalid_argument("torus mode: k must be nonzero");
  return {2.0 * kPi * m.k1 / d.L1, 2.0 * kPi * m.k2 / d.L2};
}

}  // namespace

std::complex<double> eval_torus_mode(const TorusDomain& d, const TorusMode& m, double x1, double x2) {
  const Eigen::Vector2d w = frequency(d, m);
  return std::polar(1.0 / std::sqrt(d.area()), w.x() * x1 + w.y() * x2);
}

Eigen::Vector2cd eval_torus_mode_grad(const TorusDomain& d, const TorusMode& m, double x1, double x2) {
  const Eigen::Vector2d w = frequency(d, m);
  const std::complex<double> i_psi = std::complex<double>(0.0, 1.0) * eval_torus_mode(d, m, x1, x2);
  return {i_psi * w.x(), i_psi * w.y()};
}

double torus_mode_eigenvalue(const TorusDomain& d, const TorusMode& m) { return frequency(d, m).squaredNorm(); }

TorusGrid::TorusGrid(const TorusDomain& d, int n1, int n2) : domain_(d) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("TorusGrid: need at least one point per axis");
  if (!(d.L1 > 0.0) || !(d.L2 > 0.0)) throw std::invalid_argument("TorusGrid: periods must be positive");
  points_.reserve(static_cast<std::size_t>(n1) * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) points_.push_back({d.L1 * i / n1, d.L2 * j / n2});
  weights_ = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(points_.size()), d.area() / (double(n1) * n2));
}

TorusGrid TorusGrid::for_max_frequency(const TorusDomain& d, int k1_max, int k2_max) {
  return TorusGrid(d, 4 * k1_max + 2, 4 * k2_max + 2);
}

}  // namespace ltcert

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ltcert {

struct SpherePoint {
  double theta = 0.0;  // colatitude in [0, pi]
  double phi = 0.0;    // longitude
};

/// Tangent vector in the orthonormal frame (e_theta, e_phi).
using Tangent = Eigen::Vector2d;

/// Raised when a frame-dependent quantity is requested too close to a pole.
class PoleGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPoleGuard = 1e-8;

/// Gauss-Legendre in cos(theta) (L nodes) times 2L uniform longitudes.
/// Weights sum to 4 pi; exact for spherical polynomials of degree <= 2L - 1.
class SphereGrid {
 public:
  explicit SphereGrid(int L);

  int L() const { return L_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<SpherePoint>& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }

 private:
  int L_;
  std::vector<SpherePoint> points_;
  Eigen::VectorXd weights_;
};

/// Real orthonormal harmonic Y_n^k, k = 1..2n+1:
///   k = 1      -> Pbar_n^0(cos theta)
///   k = 2j     -> sqrt2 Pbar_n^j(cos theta) cos(j phi)
///   k = 2j + 1 -> sqrt2 Pbar_n^j(cos theta) sin(j phi)
/// with Pbar the fully normalized associated Legendre functions, Pbar_0^0 = 1/sqrt(4 pi).
struct ScalarHarmonic {
  int degree = 0;
  int order = 1;
};

/// Position of Y_n^k in the degree-major ordering: n^2 + k - 1.
inline int harmonic_index(int n, int k) { return n * n + k - 1; }

/// Fully normalized Pbar_n^m(cos theta) and dPbar_n^m/dtheta for n <= n_max,
/// 0 <= m <= n, at one colatitude.
class LegendreTable {
 public:
  LegendreTable(int n_max, double theta);

  double value(int n, int m) const { return p_(n, m); }
  /// Throws PoleGuardError when sin(theta) < kPoleGuard.
  double dtheta(int n, int m) const;

 private:
  int n_max_;
  double sin_theta_;
  Eigen::MatrixXd p_;   // up to n_max + 1 for the derivative recurrence
  Eigen::MatrixXd dp_;
};

/// Throws std::invalid_argument for n < 0 or k outside 1..2n+1.
double eval_ylm(const ScalarHarmonic& h, const SpherePoint& s);

/// (dY/dtheta, (1/sin theta) dY/dphi). Throws PoleGuardError inside the
/// guard band sin(theta) < kPoleGuard.
Tangent eval_grad_ylm(const ScalarHarmonic& h, const SpherePoint& s);

/// All Y_n^k with n <= n_max at s, in harmonic_index order.
Eigen::VectorXd eval_all_ylm(int n_max, const SpherePoint& s);

/// Gradients of all Y_n^k with n <= n_max; row harmonic_index(n, k).
Eigen::Matrix<double, Eigen::Dynamic, 2> eval_all_grad_ylm(int n_max, const SpherePoint& s);

/// Rotation by +90 degrees in the tangent plane, (a, b) -> (-b, a).
inline Tangent perp(const Tangent& t) { return {-t.y(), t.x()}; }

enum class VectorKind { w, v };  // divergence-free perp-gradient, curl-free gradient

struct VectorEigenfield {
  VectorKind kind = VectorKind::w;
  int degree = 1;
  int order = 1;
};

/// w = perp(grad Y) / sqrt(n(n+1)),  v = grad Y / sqrt(n(n+1)).
Tangent eval_vector_field(const VectorEigenfield& f, const SpherePoint& s);

/// The w or v field of degree n from a precomputed gradient of Y_n^k.
inline Tangent eval_vector_field_from_gradient(const Tangent& grad, int n, VectorKind kind) {
  const Tangent g = grad / std::sqrt(n * (n + 1.0));
  return kind == VectorKind::w ? perp(g) : g;
}

/// Rectangular torus [0, L1) x [0, L2).
struct TorusDomain {
  double L1 = 2.0 * std::numbers::pi;
  double L2 = 2.0 * std::numbers::pi;

  /// [0, 2 pi / alpha) x [0, 2 pi).
  static TorusDomain elongated(double alpha);
  double area() const { return L1 * L2; }
  /// Ratio of the long to the short side.
  double aspect() const;
};

/// exp(i (w1 x1 + w2 x2)) / sqrt(area), w = (2 pi k1 / L1, 2 pi k2 / L2), k != 0.
struct TorusMode {
  int k1 = 1;
  int k2 = 0;
};

std::complex<double> eval_torus_mode(const TorusDomain& d, const TorusMode& m, double x1, double x2);
Eigen::Vector2cd eval_torus_mode_grad(const TorusDomain& d, const TorusMode& m, double x1, double x2);
/// |w|^2.
double torus_mode_eigenvalue(const TorusDomain& d, const TorusMode& m);

struct TorusPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Equispaced n1 x n2 grid with equal weights summing to the area; exact for
/// trigonometric polynomials with |frequency index| < n along each axis.
class TorusGrid {
 public:
  TorusGrid(const TorusDomain& d, int n1, int n2);
  /// Grid exact for products of four modes with |k_i| <= k_max.
  static TorusGrid for_max_frequency(const TorusDomain& d, int k1_max, int k2_max);

  const TorusDomain& domain() const { return domain_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<TorusPoint>& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }

 private:
  TorusDomain domain_;
  std::vector<TorusPoint> points_;
  Eigen::VectorXd weights_;
};

}  // namespace ltcert

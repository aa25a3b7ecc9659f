#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "ltcert/harmonics.hpp"

namespace ltcert {

enum class FamilyKind { sphere_scalar, sphere_w, sphere_v, sphere_mixed, torus };

std::string to_string(FamilyKind k);

/// Eigenfunctions Y_n^k (or w, v fields) with 1 <= n <= N - 1.
struct SphereScalarSpec { int N = 2; };
struct SphereWSpec { int N = 2; };
struct SphereVSpec { int N = 2; };
/// The w and the v fields together.
struct SphereMixedSpec { int N = 2; };
struct TorusSpec {
  TorusDomain domain;
  std::vector<TorusMode> modes;
};

using FamilySpec = std::variant<SphereScalarSpec, SphereWSpec, SphereVSpec, SphereMixedSpec, TorusSpec>;

/// Basis samples on a quadrature grid. Row p * components + c holds
/// component c at point p; column j is basis function j.
struct FamilySamples {
  std::size_t points = 0;
  int components = 1;
  Eigen::VectorXd weights;  // per point
  Eigen::MatrixXcd values;
};

namespace detail {

struct SphereBasis {
  int n_max = 1;
  std::vector<ScalarHarmonic> harmonics;
  std::vector<VectorKind> kinds;  // empty for scalar families
};
struct TorusBasis {
  TorusDomain domain;  // domain of the unlifted modes
  std::vector<TorusMode> modes;
};

}  // namespace detail

/// Members u_i = sum_j C_ij phi_j of an eigenbasis phi_j with eigenvalues
/// lambda_j. The Dirichlet energy sum_i ||grad u_i||^2 (or ||rot||^2 + ||div||^2
/// for fields) is sum_ij |C_ij|^2 lambda_j, exact for any coefficient matrix.
class OrthonormalFamily {
 public:
  FamilyKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }
  int components() const { return kind_ == FamilyKind::sphere_scalar || kind_ == FamilyKind::torus ? 1 : 2; }
  bool on_sphere() const { return kind_ != FamilyKind::torus; }

  Eigen::Index size() const { return coefficients_.rows(); }
  Eigen::Index basis_size() const { return coefficients_.cols(); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& coefficients() const { return coefficients_; }

  double dirichlet_sum() const;
  /// ||grad u_i||^2 per member.
  Eigen::VectorXd dirichlet_per_member() const;

  /// The family with coefficients U C (U is size() x size()).
  OrthonormalFamily mixed(const Eigen::MatrixXcd& U) const;
  /// Keeps the basis, replaces the coefficients (rows = members).
  OrthonormalFamily with_coefficients(Eigen::MatrixXcd C, std::string descriptor) const;

  /// Basis values on the natural grid, exact for products of four members.
  FamilySamples sample_basis() const;
  /// Basis gradients on the same grid (scalar families only); two components.
  FamilySamples sample_basis_gradients() const;
  /// Member values, rows as in sample_basis().
  Eigen::MatrixXcd member_values(const FamilySamples& basis) const;

  /// Torus domain of the basis (torus families only).
  const TorusDomain& torus_domain() const;
  /// Number of copies in x2 for a periodically lifted torus family (1 otherwise).
  int lift_copies() const { return lift_copies_; }

  friend OrthonormalFamily build_family(const FamilySpec& spec);
  friend OrthonormalFamily periodic_lift(const OrthonormalFamily& family, int copies);

 private:
  using SphereBasis = detail::SphereBasis;
  using TorusBasis = detail::TorusBasis;

  FamilyKind kind_ = FamilyKind::sphere_scalar;
  std::string descriptor_;
  std::variant<SphereBasis, TorusBasis> basis_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd coefficients_;
  int lift_copies_ = 1;
};

/// Throws std::invalid_argument for N < 2, an empty mode set, k = 0 or a
/// repeated mode.
OrthonormalFamily build_family(const FamilySpec& spec);

/// Extends a torus family on [0, L1) x [0, L2) periodically `copies` times in
/// x2 and multiplies by 1/sqrt(copies); the result lives on [0, L1) x [0, copies L2).
OrthonormalFamily periodic_lift(const OrthonormalFamily& family, int copies);

/// Maximum |G - I| over the Gram matrix of the members on the natural grid.
double gram_residual(const OrthonormalFamily& family);

/// Pseudo-random orthogonal (real) matrix from a seed, via QR of a Gaussian matrix.
Eigen::MatrixXd random_orthogonal(Eigen::Index n, unsigned seed);

}  // namespace ltcert

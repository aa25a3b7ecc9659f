#include "ltcert/family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "ltcert/verification.hpp"

namespace ltcert {

namespace {

int max_abs(const std::vector<TorusMode>& modes, int TorusMode::*axis) {
  int m = 0;
  for (const auto& mode : modes) m = std::max(m, std::abs(mode.*axis));
  return m;
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::sphere_scalar: return "sphere-scalar";
    case FamilyKind::sphere_w: return "sphere-w";
    case FamilyKind::sphere_v: return "sphere-v";
    case FamilyKind::sphere_mixed: return "sphere-mixed";
    case FamilyKind::torus: return "torus";
  }
  return "unknown";
}

double OrthonormalFamily::dirichlet_sum() const { return dirichlet_per_member().sum(); }

Eigen::VectorXd OrthonormalFamily::dirichlet_per_member() const { return coefficients_.cwiseAbs2() * eigenvalues_; }

OrthonormalFamily OrthonormalFamily::mixed(const Eigen::MatrixXcd& U) const {
  if (U.rows() != size() || U.cols() != size()) throw std::invalid_argument("mixed: U must be size x size");
  return with_coefficients(U * coefficients_, descriptor_ + " (mixed)");
}

OrthonormalFamily OrthonormalFamily::with_coefficients(Eigen::MatrixXcd C, std::string descriptor) const {
  if (C.cols() != basis_size() || C.rows() < 1) throw std::invalid_argument("with_coefficients: column count must match the basis");
  OrthonormalFamily out = *this;
  out.coefficients_ = std::move(C);
  out.descriptor_ = std::move(descriptor);
  return out;
}

const TorusDomain& OrthonormalFamily::torus_domain() const {
  if (const auto* t = std::get_if<TorusBasis>(&basis_)) return t->domain;
  throw std::logic_error("torus_domain: not a torus family");
}

FamilySamples OrthonormalFamily::sample_basis() const {
  FamilySamples out;
  out.components = components();
  if (const auto* s = std::get_if<SphereBasis>(&basis_)) {
    const SphereGrid grid(2 * (s->n_max + 1));
    out.points = grid.size();
    out.weights = grid.weights();
    const auto cols = static_cast<Eigen::Index>(s->harmonics.size());
    out.values.resize(static_cast<Eigen::Index>(out.points) * out.components, cols);
    for (std::size_t p = 0; p < out.points; ++p) {
      const auto row = static_cast<Eigen::Index>(p) * out.components;
      if (s->kinds.empty()) {
        const Eigen::VectorXd y = eval_all_ylm(s->n_max, grid.points()[p]);
        for (Eigen::Index j = 0; j < cols; ++j) {
          const auto& h = s->harmonics[static_cast<std::size_t>(j)];
          out.values(row, j) = y(harmonic_index(h.degree, h.order));
        }
        continue;
      }
      const auto g = eval_all_grad_ylm(s->n_max, grid.points()[p]);
      for (Eigen::Index j = 0; j < cols; ++j) {
        const auto& h = s->harmonics[static_cast<std::size_t>(j)];
        Tangent t = g.row(harmonic_index(h.degree, h.order)).transpose() / std::sqrt(h.degree * (h.degree + 1.0));
        if (s->kinds[static_cast<std::size_t>(j)] == VectorKind::w) t = perp(t);
        out.values(row, j) = t.x();
        out.values(row + 1, j) = t.y();
      }
    }
    return out;
  }
  const auto& t = std::get<TorusBasis>(basis_);
  const TorusDomain lifted{t.domain.L1, t.domain.L2 * lift_copies_};
  const TorusGrid grid(lifted, 4 * max_abs(t.modes, &TorusMode::k1) + 2,
                       4 * lift_copies_ * max_abs(t.modes, &TorusMode::k2) + 2);
  out.points = grid.size();
  out.weights = grid.weights();
  const double scale = 1.0 / std::sqrt(static_cast<double>(lift_copies_));
  out.values.resize(static_cast<Eigen::Index>(out.points), static_cast<Eigen::Index>(t.modes.size()));
  for (std::size_t p = 0; p < out.points; ++p) {
    const TorusPoint& x = grid.points()[p];
    const double x2 = std::fmod(x.x2, t.domain.L2);
    for (std::size_t j = 0; j < t.modes.size(); ++j)
      out.values(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(j)) =
          scale * eval_torus_mode(t.domain, t.modes[j], x.x1, x2);
  }
  return out;
}

FamilySamples OrthonormalFamily::sample_basis_gradients() const {
  if (components() != 1) throw std::logic_error("sample_basis_gradients: scalar families only");
  FamilySamples out;
  out.components = 2;
  if (const auto* s = std::get_if<SphereBasis>(&basis_)) {
    const SphereGrid grid(2 * (s->n_max + 1));
    out.points = grid.size();
    out.weights = grid.weights();
    out.values.resize(static_cast<Eigen::Index>(out.points) * 2, static_cast<Eigen::Index>(s->harmonics.size()));
    for (std::size_t p = 0; p < out.points; ++p) {
      const auto g = eval_all_grad_ylm(s->n_max, grid.points()[p]);
      for (std::size_t j = 0; j < s->harmonics.size(); ++j) {
        const auto idx = harmonic_index(s->harmonics[j].degree, s->harmonics[j].order);
        out.values(static_cast<Eigen::Index>(2 * p), static_cast<Eigen::Index>(j)) = g(idx, 0);
        out.values(static_cast<Eigen::Index>(2 * p + 1), static_cast<Eigen::Index>(j)) = g(idx, 1);
      }
    }
    return out;
  }
  const auto& t = std::get<TorusBasis>(basis_);
  const TorusDomain lifted{t.domain.L1, t.domain.L2 * lift_copies_};
  const TorusGrid grid(lifted, 4 * max_abs(t.modes, &TorusMode::k1) + 2,
                       4 * lift_copies_ * max_abs(t.modes, &TorusMode::k2) + 2);
  out.points = grid.size();
  out.weights = grid.weights();
  const double scale = 1.0 / std::sqrt(static_cast<double>(lift_copies_));
  out.values.resize(static_cast<Eigen::Index>(out.points) * 2, static_cast<Eigen::Index>(t.modes.size()));
  for (std::size_t p = 0; p < out.points; ++p) {
    const TorusPoint& x = grid.points()[p];
    const double x2 = std::fmod(x.x2, t.domain.L2);
    for (std::size_t j = 0; j < t.modes.size(); ++j) {
      const Eigen::Vector2cd g = scale * eval_torus_mode_grad(t.domain, t.modes[j], x.x1, x2);
      out.values(static_cast<Eigen::Index>(2 * p), static_cast<Eigen::Index>(j)) = g(0);
      out.values(static_cast<Eigen::Index>(2 * p + 1), static_cast<Eigen::Index>(j)) = g(1);
    }
  }
  return out;
}

Eigen::MatrixXcd OrthonormalFamily::member_values(const FamilySamples& basis) const {
  return basis.values * coefficients_.transpose();
}

OrthonormalFamily build_family(const FamilySpec& spec) {
  OrthonormalFamily f;
  auto sphere = [&f](int N, FamilyKind kind, const char* name) {
    if (N < 2) throw std::invalid_argument(std::string(name) + ": N must be >= 2");
    f.kind_ = kind;
    f.descriptor_ = std::string(name) + "(" + std::to_string(N) + ")";
    OrthonormalFamily::SphereBasis b;
    b.n_max = N - 1;
    std::vector<double> lambda;
    const int passes = kind == FamilyKind::sphere_mixed ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
      const VectorKind vk = (kind == FamilyKind::sphere_v || pass == 1) ? VectorKind::v : VectorKind::w;
      for (int n = 1; n <= N - 1; ++n) {
        for (int k = 1; k <= 2 * n + 1; ++k) {
          b.harmonics.push_back({n, k});
          if (kind != FamilyKind::sphere_scalar) b.kinds.push_back(vk);
          lambda.push_back(n * (n + 1.0));
        }
      }
    }
    f.eigenvalues_ = Eigen::Map<const Eigen::VectorXd>(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
    f.coefficients_ = Eigen::MatrixXcd::Identity(f.eigenvalues_.size(), f.eigenvalues_.size());
    f.basis_ = std::move(b);
  };
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, SphereScalarSpec>) sphere(s.N, FamilyKind::sphere_scalar, "sphere-scalar");
        else if constexpr (std::is_same_v<S, SphereWSpec>) sphere(s.N, FamilyKind::sphere_w, "sphere-w");
        else if constexpr (std::is_same_v<S, SphereVSpec>) sphere(s.N, FamilyKind::sphere_v, "sphere-v");
        else if constexpr (std::is_same_v<S, SphereMixedSpec>) sphere(s.N, FamilyKind::sphere_mixed, "sphere-mixed");
        else {
          if (s.modes.empty()) throw std::invalid_argument("torus family: mode set is empty");
          std::set<std::pair<int, int>> seen;
          Eigen::VectorXd lambda(static_cast<Eigen::Index>(s.modes.size()));
          for (std::size_t j = 0; j < s.modes.size(); ++j) {
            if (!seen.insert({s.modes[j].k1, s.modes[j].k2}).second)
              throw std::invalid_argument("torus family: repeated mode");
            lambda(static_cast<Eigen::Index>(j)) = torus_mode_eigenvalue(s.domain, s.modes[j]);
          }
          f.kind_ = FamilyKind::torus;
          f.descriptor_ = "torus(" + std::to_string(s.modes.size()) + " modes, aspect " +
                          format_number(s.domain.aspect()) + ")";
          f.eigenvalues_ = lambda;
          f.coefficients_ = Eigen::MatrixXcd::Identity(lambda.size(), lambda.size());
          f.basis_ = OrthonormalFamily::TorusBasis{s.domain, s.modes};
        }
      },
      spec);
  return f;
}

OrthonormalFamily periodic_lift(const OrthonormalFamily& family, int copies) {
  if (family.kind() != FamilyKind::torus) throw std::invalid_argument("periodic_lift: torus families only");
  if (copies < 1) throw std::invalid_argument("periodic_lift: copies must be >= 1");
  OrthonormalFamily out = family;
  out.lift_copies_ = family.lift_copies_ * copies;
  out.descriptor_ = family.descriptor_ + " lifted x" + std::to_string(copies);
  return out;
}

double gram_residual(const OrthonormalFamily& family) {
  const FamilySamples s = family.sample_basis();
  const Eigen::MatrixXcd m = family.member_values(s);
  const Eigen::VectorXd w = s.weights.replicate(1, s.components).transpose().reshaped();
  const Eigen::MatrixXcd gram = m.adjoint() * w.asDiagonal() * m;
  return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd random_orthogonal(Eigen::Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

}  // namespace ltcert

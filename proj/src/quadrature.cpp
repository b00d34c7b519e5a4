#include "hsqm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hsqm/error.hpp"

namespace hsqm {

namespace {

constexpr int kMaxRadialNodes = 340;  // e^{-t/2} underflows beyond t ~ 1400

// L_{n-1}(t) e^{-t/2} and L_n(t) e^{-t/2}; the damped polynomials stay in [-1, 1].
std::pair<double, double> damped_laguerre_pair(int n, double t) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * t);
  for (int j = 0; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 - t) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

GaussLaguerre gauss_laguerre(int n) {
  if (n < 1 || n > kMaxRadialNodes) {
    throw InvalidParameter("gauss_laguerre: node count must be in [1, " + std::to_string(kMaxRadialNodes) + "]");
  }
  // Golub-Welsch seeds, then Newton on L_n.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) jacobi(k, k + 1) = jacobi(k + 1, k) = k + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi, Eigen::EigenvaluesOnly);

  GaussLaguerre rule;
  rule.nodes.resize(n);
  rule.scaled_weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double t = eig.eigenvalues()(k);
    for (int iter = 0; iter < 8; ++iter) {
      const auto [lm1, ln] = damped_laguerre_pair(n, t);
      const double deriv = n * (ln - lm1) / t;
      const double step = ln / deriv;
      t -= step;
      if (std::abs(step) <= 1e-15 * t) break;
    }
    const double next = damped_laguerre_pair(n + 1, t).second;
    rule.nodes[k] = t;
    rule.scaled_weights[k] = t / ((n + 1.0) * (n + 1.0) * next * next);
  }
  return rule;
}

QuadratureScheme::QuadratureScheme(int radial, int angular, bool allow_small)
    : radial_(radial), angular_(angular), allow_small_(allow_small), rule_(gauss_laguerre(radial)) {
  if (angular < 1) throw InvalidParameter("QuadratureScheme: angular node count must be positive");
}

QuadratureScheme QuadratureScheme::defaults(FockSpace space) {
  return QuadratureScheme(2 * space.dim(), 4 * space.dim() + 1);
}

std::vector<PlaneNode> QuadratureScheme::plane_nodes(double decay) const {
  if (!(decay > 0.0)) throw InvalidParameter("plane_nodes: decay must be positive");
  const double dphi = 2.0 * std::numbers::pi / angular_;
  std::vector<PlaneNode> out;
  out.reserve(static_cast<std::size_t>(radial_) * angular_);
  for (int k = 0; k < radial_; ++k) {
    const double t = rule_.nodes[k] / decay;
    const double w = rule_.scaled_weights[k] / decay;
    for (int j = 0; j < angular_; ++j) out.push_back({t, j * dphi, w * dphi});
  }
  return out;
}

void QuadratureScheme::require_covers(FockSpace space) const {
  if (allow_small_) return;
  const int n = space.dim();
  if (radial_ < 2 * n || angular_ < 2 * n + 1) {
    throw InvalidParameter("QuadratureScheme: need at least " + std::to_string(2 * n) + " radial and " +
                           std::to_string(2 * n + 1) + " angular nodes for N=" + std::to_string(n));
  }
}

}  // namespace hsqm

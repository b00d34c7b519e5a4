#pragma once

#include <vector>

#include "hsqm/fock.hpp"

namespace hsqm {

/// Gauss-Laguerre rule for the weight e^{-t} on [0, inf).
///
/// `scaled_weights` hold w_k e^{t_k}, so sum_k scaled_weights[k] g(t_k)
/// approximates int_0^inf g(t) dt for g decaying like a polynomial times
/// e^{-t}. Exact when g(t) e^{t} is a polynomial of degree < 2n.
struct GaussLaguerre {
  std::vector<double> nodes;
  std::vector<double> scaled_weights;
};

GaussLaguerre gauss_laguerre(int n);

/// One node of a polar rule over the plane, for the measure dt dphi.
struct PlaneNode {
  double t;
  double phi;
  double weight;
};

/// Radial Gauss-Laguerre in t times a uniform angular rule in phi.
///
/// With t = (x^2 + y^2)/2 the measure dx dy is dt dphi; with t = |z|^2 the
/// measure d^2z is dt dphi / 2. The angular rule with M nodes is exact for
/// trigonometric polynomials of degree < M.
class QuadratureScheme {
 public:
  QuadratureScheme(int radial, int angular, bool allow_small = false);

  /// 2N radial and 4N+1 angular nodes.
  static QuadratureScheme defaults(FockSpace space);

  int radial() const noexcept { return radial_; }
  int angular() const noexcept { return angular_; }
  bool allow_small() const noexcept { return allow_small_; }
  const GaussLaguerre& rule() const noexcept { return rule_; }

  /// Nodes for integrands decaying like e^{-decay t}: the radial nodes are
  /// rescaled to t_k / decay so the quadrature stays exact for
  /// polynomial(t) e^{-decay t}.
  std::vector<PlaneNode> plane_nodes(double decay = 1.0) const;

  /// Throws InvalidParameter unless radial >= 2N and angular >= 2N+1
  /// (skipped for schemes built with allow_small).
  void require_covers(FockSpace space) const;

 private:
  int radial_;
  int angular_;
  bool allow_small_;
  GaussLaguerre rule_;
};

}  // namespace hsqm

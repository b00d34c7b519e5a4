#pragma once

#include <functional>
#include <utility>

#include "hsqm/hs_space.hpp"
#include "hsqm/quadrature.hpp"

namespace hsqm {

/// Phase-space point (x, y). The Weyl operator e^{-i(xQ + yP)} equals the
/// displacement D(alpha) with alpha = (y - i x)/sqrt(2).
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;

  cplx alpha() const;
  static PhasePoint from_alpha(cplx alpha);
  /// Point at t = (x^2 + y^2)/2 and polar angle phi of alpha.
  static PhasePoint from_polar(double t, double phi);
};

using PhaseFunction = std::function<cplx(const PhasePoint&)>;

/// U(x, y) = e^{-i(xQ + yP)} on the retained levels.
Operator weyl_operator(FockSpace space, const PhasePoint& p);

/// (WX)(x, y) = (2 pi)^{-1/2} Tr[U(x, y)^dagger X].
cplx wigner_transform(const HSOperator& x, const PhasePoint& p);

/// Samples of W(X) at every node of the scheme, in plane_nodes() order.
Vector wigner_samples(const HSOperator& x, const QuadratureScheme& q);

/// (2 pi)^{-1/2} int U(x, y) f(x, y) dx dy, by quadrature.
HSOperator wigner_inverse(const PhaseFunction& f, const QuadratureScheme& q, FockSpace space);

/// |int conj(WX) WY dx dy - <X|Y>_2|.
double unitarity_residual(const HSOperator& x, const HSOperator& y, const QuadratureScheme& q);

/// Quadrature Gram matrix of {W(Phi_nl) : n, l < block}, ordered n*block + l.
Matrix wigner_gram(FockSpace space, int block, const QuadratureScheme& q);

/// max over Phi_nl with n, l < block of ||W^{-1} W Phi_nl - Phi_nl||_2.
double roundtrip_residual(FockSpace space, int block, const QuadratureScheme& q);

/// (U v I, I v U^dagger) in the B2 picture.
std::pair<SuperOp, SuperOp> lifted_unitaries(FockSpace space, const PhasePoint& p);

}  // namespace hsqm

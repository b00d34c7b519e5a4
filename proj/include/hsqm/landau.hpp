#pragma once

#include <functional>

#include "hsqm/hs_space.hpp"
#include "hsqm/quadrature.hpp"

namespace hsqm {

/// Physical inputs of the noncommutative Landau problem with a harmonic
/// trap. theta is the area scale of [x^1, x^2] = i theta.
struct LandauParams {
  double mass = 1.0;
  double omega0 = 1.0;
  double omega_c = 2.0;
  double theta = 0.1;
  double hbar = 1.0;

  /// Throws InvalidParameter for M <= 0, omega0 < 0, omega_c <= 0,
  /// theta < 0, hbar <= 0 or non-finite fields.
  void validate() const;
};

struct ChiralFrequencies {
  double Omega;
  double zeta;
  double Omega_tilde;
  double omega_c_tilde;
  double Omega_plus;
  double Omega_minus;
};

/// Closed forms with disc = 1 - M omega_c theta/2 + (M Omega theta/4)^2.
/// Throws InvalidParameter when disc <= 0 or Omega_minus < 0; the
/// first-order omega_c_tilde can push Omega_minus negative at large theta.
ChiralFrequencies chiral_frequencies(const LandauParams& p);

/// E(n+, n-) for 0 <= n+- <= n_max, rows indexed by n+.
Eigen::MatrixXd spectrum(const LandauParams& p, int n_max);

/// c[n+, m+, n-, m-] on |n+><m+| (x) |n-><m-|. Stored as an N^2 x N^2
/// matrix with row n+*N + m+ and column n-*N + m-, so the flat row-major
/// index is ((n+*N + m+)*N + n-)*N + m-.
class TensorState {
 public:
  TensorState(FockSpace space, Matrix coeffs);

  static TensorState basis(FockSpace space, int n_plus, int m_plus, int n_minus, int m_minus);
  static TensorState product(const HSOperator& plus, const HSOperator& minus);

  const FockSpace& space() const noexcept { return space_; }
  const Matrix& coeffs() const noexcept { return c_; }
  cplx operator()(int n_plus, int m_plus, int n_minus, int m_minus) const;

  TensorState operator+(const TensorState& rhs) const;
  TensorState operator-(const TensorState& rhs) const;
  TensorState operator*(cplx s) const;

 private:
  FockSpace space_;
  Matrix c_;
};

cplx tensor_inner(const TensorState& x, const TensorState& y);
double tensor_norm(const TensorState& x);

/// S+ (x) I + I (x) S- on the two-sector space.
struct TensorSuperOp {
  SuperOp plus;
  SuperOp minus;

  TensorState apply(const TensorState& x) const;
  TensorState operator()(const TensorState& x) const { return apply(x); }
};

/// H_theta = H+ (x) I + I (x) H-, H+- = hbar Omega+- (N+- + 1/2) acting on
/// the left index of each sector.
TensorSuperOp hamiltonian_op(const LandauParams& p, FockSpace space);

enum class ChiralLadder { APlus, APlusDag, AMinus, AMinusDag };

/// Chiral ladder operators: a acting on the left index of the + or -
/// sector.
TensorState apply_ladder(ChiralLadder which, const TensorState& x);

/// Largest deviation of [A+, A+^dag] = [A-, A-^dag] = 1 and
/// [A+, A-^dag] = [A-, A+^dag] = 0 on basis states with all indices
/// below `block` (block < N keeps the top level out of reach).
double ladder_algebra_residual(FockSpace space, int block);

/// |z+, z-) = |z+><z+| (x) |z-><z-| with Glauber states truncated to the
/// retained levels. Throws InvalidParameter beyond sqrt(N)/4.
TensorState tensor_cs(const LandauParams& p, FockSpace space, cplx z_plus, cplx z_minus);

struct PartitionFunctions {
  double plus;
  double minus;
  double total() const { return plus * minus; }
};

/// Z+- = e^{-x/2}/(1 - e^{-x}), x = beta hbar Omega+-. Throws for
/// beta <= 0 or Omega+- <= 0.
PartitionFunctions partition(const LandauParams& p, double beta);

/// Q(|z+|^2) Q(|z-|^2), Q(s) = (1 - e^{-x}) e^{-(1 - e^{-x}) s}.
double husimi(const LandauParams& p, double beta, cplx z_plus, cplx z_minus);

/// |(1/pi^2) int int husimi d^2z+ d^2z- - 1| over the product polar rule.
double husimi_trace_residual(const LandauParams& p, double beta, const QuadratureScheme& q);

/// Quadrature of (1/pi^2) int int |z+,z-)(z+,z-| d^2z+ d^2z- on tensor
/// states with every index below `block`; operator-norm distance from the
/// identity. Levels 0..N/4 by default.
double tensor_resolution_residual(FockSpace space, const QuadratureScheme& q);

/// Per-sector (1/pi) int |z><z| d^2z against I on levels 0..N/4, read on H;
/// max-entry distance.
double sector_hilbert_resolution_residual(FockSpace space, const QuadratureScheme& q);

// Lowest Landau level, with l0 = hbar = 1.

/// phi_{0,m}(z) = (2 pi m!)^{-1/2} (z/sqrt 2)^m e^{-|z|^2/4}.
cplx lll_state(int m, cplx z);
/// (0, zbar|0, m) = e^{-|z|^2/2} z^m / sqrt(m!).
cplx lll_overlap(int m, cplx z);
/// |0, zbar) = sum_m e^{-|z|^2/2} zbar^m/sqrt(m!) |0><m| over m < N.
HSOperator lll_coherent(FockSpace space, cplx z);
/// P0 = |0><0| v I: keeps the row-0 part of X. Rank N.
SuperOp lll_projector(FockSpace space);
/// e^{(|z|^2 + |z'|^2)/2} (0, zbar|P0|0, zbar'), assembled from the
/// truncated projector.
cplx projector_kernel(FockSpace space, cplx z, cplx z_prime);
/// e^{z zbar'}.
cplx reproducing_kernel(cplx z, cplx z_bar_prime);

using HolFunction = std::function<cplx(cplx)>;
/// (1/pi) int e^{z wbar} f(w) e^{-|w|^2} d^2w.
cplx project_hol(const HolFunction& f, const QuadratureScheme& q, cplx z);

struct UncertaintyReport {
  double mean_x, mean_y, mean_px, mean_py;
  double var_x, var_y, var_px, var_py;
  /// Delta X Delta Y and friends (not squared).
  double dx_dy, dx_dpx, dy_dpy, dpx_dpy;
};

/// Variances of X = sqrt(theta/2)(a_R + a_R^dag), Y = i sqrt(theta/2)(a_R^dag - a_R),
/// P_X = -i hbar/sqrt(2 theta) [a - a^dag, .], P_Y = -hbar/sqrt(2 theta) [a + a^dag, .]
/// with a_R(psi) = psi a, in a normalized state of one sector.
/// Throws InvalidParameter for theta = 0.
UncertaintyReport uncertainty_report(const LandauParams& p, const HSOperator& state);
/// Same with the operators acting on the - sector of a tensor state.
UncertaintyReport uncertainty_report(const LandauParams& p, const TensorState& state);
/// In |0,0;0,0).
UncertaintyReport uncertainty_report(const LandauParams& p, FockSpace space);

}  // namespace hsqm

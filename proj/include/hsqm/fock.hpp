#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace hsqm {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Number states |0>, ..., |N-1> of a single bosonic mode.
class FockSpace {
 public:
  explicit FockSpace(int dim);

  int dim() const noexcept { return dim_; }
  bool operator==(const FockSpace&) const = default;

 private:
  int dim_;
};

/// Dense N x N complex operator on a truncated Fock space.
///
/// Entries are checked for NaN/Inf on construction; everything else is a
/// plain value type.
class Operator {
 public:
  Operator(FockSpace space, Matrix entries);

  static Operator identity(FockSpace space);
  static Operator zero(FockSpace space);

  const FockSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  const Matrix& matrix() const noexcept { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  Operator adjoint() const;
  cplx trace() const { return m_.trace(); }

  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator operator*(cplx s) const;
  friend Operator operator*(cplx s, const Operator& op) { return op * s; }

 private:
  FockSpace space_;
  Matrix m_;
};

/// Oscillator frequency and inverse temperature of a Gibbs state.
struct ThermalSpec {
  ThermalSpec(double omega, double beta);

  double omega;
  double beta;
};

Operator annihilation(FockSpace space);
Operator creation(FockSpace space);
Operator number(FockSpace space);
/// Q = (a + a^dagger)/sqrt(2).
Operator position(FockSpace space);
/// P = (a - a^dagger)/(i sqrt(2)).
Operator momentum(FockSpace space);

/// omega (a^dagger a + 1/2), diagonal with entries omega (n + 1/2).
Operator osc_hamiltonian(FockSpace space, double omega);

/// Generalized Laguerre polynomial L_n^{(k)}(x) by three-term recurrence.
double laguerre(int n, int k, double x);

/// Exact matrix element <m|D(alpha)|n> of the untruncated displacement
/// operator D(alpha) = exp(alpha a^dagger - conj(alpha) a).
cplx displacement_element(int m, int n, cplx alpha);

/// D(alpha) restricted to the retained levels, entry by entry from the
/// Laguerre closed form. Unitary only up to truncation at the top levels.
Operator displacement(FockSpace space, cplx alpha);

/// Gibbs weights e^{-n omega beta}, renormalized over the retained levels.
std::vector<double> thermal_weights(FockSpace space, const ThermalSpec& spec);

/// rho_beta = diag(thermal_weights); trace exactly 1.
Operator gibbs_density(FockSpace space, const ThermalSpec& spec);

}  // namespace hsqm

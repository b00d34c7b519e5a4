#pragma once

#include "hsqm/hs_space.hpp"

namespace hsqm {

/// A faithful density rho = e^{-beta H}/Z on H_N with its eigendecomposition
/// cached. Immutable after construction.
class ModularData {
 public:
  /// Validates that rho is Hermitian, has unit trace, is faithful and agrees
  /// with e^{-beta H}/Tr[e^{-beta H}] to 1e-10.
  ModularData(Operator rho, double beta, Operator hamiltonian);

  /// rho = e^{-beta H}/Z.
  static ModularData gibbs(const Operator& hamiltonian, double beta);
  /// H = -(1/beta) ln rho, the Gibbs convention with Z = 1.
  static ModularData from_density(const Operator& rho, double beta);
  /// Oscillator Gibbs state: H = osc_hamiltonian(omega).
  static ModularData thermal(FockSpace space, const ThermalSpec& spec);

  const Operator& rho() const noexcept { return rho_; }
  const Operator& hamiltonian() const noexcept { return hamiltonian_; }
  double beta() const noexcept { return beta_; }
  const FockSpace& space() const noexcept { return rho_.space(); }

  /// Eigenvalues of rho, ascending, all strictly positive.
  const Eigen::VectorXd& eigenvalues() const noexcept { return rho_evals_; }
  const Matrix& eigenvectors() const noexcept { return rho_evecs_; }

  /// Principal power rho^z.
  Operator rho_power(cplx z) const;
  /// e^{i z H} from the eigendecomposition of H.
  Operator evolution(cplx z) const;
  /// Phi = rho^{1/2} as an element of B2(H_N).
  HSOperator cyclic_vector() const;
  /// |v_n><v_l| built from the eigenvectors of rho.
  HSOperator eigen_basis_element(int n, int l) const;

 private:
  Operator rho_;
  double beta_;
  Operator hamiltonian_;
  Eigen::VectorXd rho_evals_;
  Matrix rho_evecs_;
  Eigen::VectorXd h_evals_;
  Matrix h_evecs_;
};

/// X -> L(conj(X)) when `conjugate` is set, X -> L(X) otherwise, with L
/// a dense matrix in the row-major vectorization.
class AntilinearMap {
 public:
  AntilinearMap(FockSpace space, Matrix linear, bool conjugate = true);

  const FockSpace& space() const noexcept { return space_; }
  const Matrix& linear() const noexcept { return linear_; }
  bool conjugates() const noexcept { return conjugate_; }

  HSOperator apply(const HSOperator& x) const;
  HSOperator operator()(const HSOperator& x) const { return apply(x); }

  /// (this o rhs); antilinear o antilinear is linear.
  AntilinearMap compose(const AntilinearMap& rhs) const;
  AntilinearMap compose(const SuperOp& rhs) const;
  friend AntilinearMap compose(const SuperOp& lhs, const AntilinearMap& rhs);

 private:
  FockSpace space_;
  Matrix linear_;
  bool conjugate_;
};

/// Delta(X) = rho X rho^{-1}.
SuperOp modular_operator(const ModularData& md);
/// Delta^{s}(X) = rho^{s} X rho^{-s} for real s.
SuperOp modular_power(const ModularData& md, double s);
/// J(X) = X^dagger.
AntilinearMap modular_conjugation(FockSpace space);
/// S(X) = rho^{-1/2} X^dagger rho^{1/2}.
AntilinearMap tomita_s(const ModularData& md);
/// F(X) = rho^{1/2} X^dagger rho^{-1/2}.
AntilinearMap tomita_f(const ModularData& md);

/// max over Phi_nl of ||S(Phi_nl) - J(Delta^{1/2}(Phi_nl))||_2.
double polar_check(const ModularData& md);

/// sigma_t(A) = rho^{it} A rho^{-it}.
SuperOp modular_flow(const ModularData& md, double t);

/// alpha_z(B) = e^{izH} B e^{-izH} for complex time z.
Operator heisenberg_flow(const ModularData& md, const Operator& b, cplx z);

/// |phi(A alpha_{t+i beta}(B)) - phi(alpha_t(B) A)| with phi = Tr[rho .].
double kms_residual(const ModularData& md, const Operator& a, const Operator& b, double t);

/// Tr[rho A].
cplx state_eval(const ModularData& md, const Operator& a);

}  // namespace hsqm

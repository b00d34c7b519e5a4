#include "hsqm/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "hsqm/error.hpp"

namespace hsqm {

namespace {

constexpr double kFaithfulFloor = 1e-14;
constexpr double kGibbsMatchTol = 1e-10;

void require_hermitian(const Operator& op, const char* what) {
  const double scale = std::max(1.0, op.matrix().norm());
  if ((op.matrix() - op.matrix().adjoint()).norm() > 1e-12 * scale) {
    throw InvalidParameter(std::string(what) + " is not Hermitian");
  }
}

Matrix spectral(const Matrix& vecs, const Vector& diag) {
  return vecs * diag.asDiagonal() * vecs.adjoint();
}

// e^{-beta H}/Tr[e^{-beta H}], shifted by the ground energy for range.
Matrix gibbs_matrix(const Eigen::VectorXd& h, const Matrix& vecs, double beta) {
  const double h0 = h.minCoeff();
  Vector w(h.size());
  double z = 0.0;
  for (Eigen::Index k = 0; k < h.size(); ++k) {
    const double e = std::exp(-beta * (h(k) - h0));
    w(k) = e;
    z += e;
  }
  return spectral(vecs, w / z);
}

// vec(X^T) = T vec(X) in the row-major vectorization.
Matrix transpose_permutation(int n) {
  Matrix t = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t(vec_index(i, j, n), vec_index(j, i, n)) = 1.0;
  }
  return t;
}

}  // namespace

ModularData::ModularData(Operator rho, double beta, Operator hamiltonian)
    : rho_(std::move(rho)), beta_(beta), hamiltonian_(std::move(hamiltonian)) {
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) throw InvalidParameter("ModularData: beta must be positive");
  if (rho_.space() != hamiltonian_.space()) throw DimensionError("ModularData: rho and hamiltonian dimensions differ");
  require_hermitian(rho_, "ModularData: rho");
  require_hermitian(hamiltonian_, "ModularData: hamiltonian");
  if (std::abs(rho_.trace() - 1.0) > 1e-12) throw InvalidParameter("ModularData: rho must have unit trace");

  Eigen::SelfAdjointEigenSolver<Matrix> rho_eig(rho_.matrix());
  rho_evals_ = rho_eig.eigenvalues();
  rho_evecs_ = rho_eig.eigenvectors();
  const double top = rho_evals_.maxCoeff();
  if (!(rho_evals_.minCoeff() > kFaithfulFloor * top)) {
    throw NotFaithful("ModularData: rho has eigenvalue " + std::to_string(rho_evals_.minCoeff()) +
                      ", state is not faithful");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> h_eig(hamiltonian_.matrix());
  h_evals_ = h_eig.eigenvalues();
  h_evecs_ = h_eig.eigenvectors();
  const double mismatch = (rho_.matrix() - gibbs_matrix(h_evals_, h_evecs_, beta_)).norm();
  if (mismatch > kGibbsMatchTol) {
    throw InvalidParameter("ModularData: rho differs from exp(-beta H)/Z by " + std::to_string(mismatch));
  }
}

ModularData ModularData::gibbs(const Operator& hamiltonian, double beta) {
  require_hermitian(hamiltonian, "ModularData::gibbs: hamiltonian");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hamiltonian.matrix());
  Operator rho(hamiltonian.space(), gibbs_matrix(eig.eigenvalues(), eig.eigenvectors(), beta));
  // Symmetrize away rounding so the Hermiticity check is exact.
  rho = Operator(rho.space(), 0.5 * (rho.matrix() + rho.matrix().adjoint()));
  return ModularData(std::move(rho), beta, hamiltonian);
}

ModularData ModularData::from_density(const Operator& rho, double beta) {
  if (!(beta > 0.0)) throw InvalidParameter("ModularData::from_density: beta must be positive");
  require_hermitian(rho, "ModularData::from_density: rho");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.matrix());
  const Eigen::VectorXd& p = eig.eigenvalues();
  if (!(p.minCoeff() > kFaithfulFloor * p.maxCoeff())) {
    throw NotFaithful("ModularData::from_density: state is not faithful");
  }
  Vector h(p.size());
  for (Eigen::Index k = 0; k < p.size(); ++k) h(k) = -std::log(p(k)) / beta;
  Operator ham(rho.space(), spectral(eig.eigenvectors(), h));
  ham = Operator(ham.space(), 0.5 * (ham.matrix() + ham.matrix().adjoint()));
  return ModularData(rho, beta, std::move(ham));
}

ModularData ModularData::thermal(FockSpace space, const ThermalSpec& spec) {
  return ModularData(gibbs_density(space, spec), spec.beta, osc_hamiltonian(space, spec.omega));
}

Operator ModularData::rho_power(cplx z) const {
  Vector d(rho_evals_.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = std::exp(z * std::log(rho_evals_(k)));
  return Operator(space(), spectral(rho_evecs_, d));
}

Operator ModularData::evolution(cplx z) const {
  const cplx iz = cplx(0.0, 1.0) * z;
  Vector d(h_evals_.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = std::exp(iz * h_evals_(k));
  return Operator(space(), spectral(h_evecs_, d));
}

HSOperator ModularData::cyclic_vector() const { return HSOperator(rho_power(0.5)); }

HSOperator ModularData::eigen_basis_element(int n, int l) const {
  const int dim = space().dim();
  if (n < 0 || l < 0 || n >= dim || l >= dim) throw InvalidParameter("eigen_basis_element: index out of range");
  return HSOperator(space(), rho_evecs_.col(n) * rho_evecs_.col(l).adjoint());
}

AntilinearMap::AntilinearMap(FockSpace space, Matrix linear, bool conjugate)
    : space_(space), linear_(std::move(linear)), conjugate_(conjugate) {
  const Eigen::Index d = static_cast<Eigen::Index>(space.dim()) * space.dim();
  if (linear_.rows() != d || linear_.cols() != d) throw DimensionError("AntilinearMap: linear part has wrong shape");
}

HSOperator AntilinearMap::apply(const HSOperator& x) const {
  if (x.space() != space_) throw DimensionError("AntilinearMap::apply: dimension mismatch");
  const Vector v = x.vec();
  return HSOperator::from_vec(space_, conjugate_ ? Vector(linear_ * v.conjugate()) : Vector(linear_ * v));
}

AntilinearMap AntilinearMap::compose(const AntilinearMap& rhs) const {
  if (rhs.space_ != space_) throw DimensionError("AntilinearMap::compose: dimension mismatch");
  // L1 K^c1 L2 K^c2 = L1 conj^c1(L2) K^(c1 xor c2)
  Matrix lin = conjugate_ ? Matrix(linear_ * rhs.linear_.conjugate()) : Matrix(linear_ * rhs.linear_);
  return AntilinearMap(space_, std::move(lin), conjugate_ != rhs.conjugate_);
}

AntilinearMap AntilinearMap::compose(const SuperOp& rhs) const {
  return compose(AntilinearMap(rhs.space(), rhs.to_dense(), false));
}

AntilinearMap compose(const SuperOp& lhs, const AntilinearMap& rhs) {
  return AntilinearMap(lhs.space(), lhs.to_dense(), false).compose(rhs);
}

SuperOp modular_operator(const ModularData& md) { return modular_power(md, 1.0); }

SuperOp modular_power(const ModularData& md, double s) {
  // rho^{-s} is Hermitian, so B^dagger = rho^{-s} with B = rho^{-s}.
  return vee(md.rho_power(s), md.rho_power(-s));
}

AntilinearMap modular_conjugation(FockSpace space) {
  return AntilinearMap(space, transpose_permutation(space.dim()), true);
}

namespace {

// Antilinear X -> left X^dagger right, assembled column by column.
AntilinearMap sandwiched_adjoint(const Operator& left, const Operator& right) {
  const FockSpace space = left.space();
  const int n = space.dim();
  Matrix lin(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const HSOperator e = basis_element(i, j, space);
      lin.col(vec_index(i, j, n)) = vectorize(left.matrix() * e.matrix().adjoint() * right.matrix());
    }
  }
  return AntilinearMap(space, std::move(lin), true);
}

}  // namespace

AntilinearMap tomita_s(const ModularData& md) {
  return sandwiched_adjoint(md.rho_power(-0.5), md.rho_power(0.5));
}

AntilinearMap tomita_f(const ModularData& md) {
  return sandwiched_adjoint(md.rho_power(0.5), md.rho_power(-0.5));
}

double polar_check(const ModularData& md) {
  const FockSpace space = md.space();
  const AntilinearMap s = tomita_s(md);
  const AntilinearMap j_delta = modular_conjugation(space).compose(modular_power(md, 0.5));
  double worst = 0.0;
  for (int n = 0; n < space.dim(); ++n) {
    for (int l = 0; l < space.dim(); ++l) {
      const HSOperator phi = basis_element(n, l, space);
      worst = std::max(worst, hs_norm(s(phi) - j_delta(phi)));
    }
  }
  return worst;
}

SuperOp modular_flow(const ModularData& md, double t) {
  const cplx it(0.0, t);
  return vee(md.rho_power(it), md.rho_power(-it).adjoint());
}

Operator heisenberg_flow(const ModularData& md, const Operator& b, cplx z) {
  return md.evolution(z) * b * md.evolution(-z);
}

double kms_residual(const ModularData& md, const Operator& a, const Operator& b, double t) {
  const Operator& rho = md.rho();
  const cplx lhs = (rho * a * heisenberg_flow(md, b, cplx(t, md.beta()))).trace();
  const cplx rhs = (rho * heisenberg_flow(md, b, cplx(t, 0.0)) * a).trace();
  return std::abs(lhs - rhs);
}

cplx state_eval(const ModularData& md, const Operator& a) { return (md.rho() * a).trace(); }

}  // namespace hsqm

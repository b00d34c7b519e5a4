#include <doctest.h>

#include <cmath>

#include "hsqm/error.hpp"
#include "hsqm/modular.hpp"
#include "oracles.hpp"

using namespace hsqm;

namespace {

// rho^{z} through Eigen's matrix logarithm and exponential.
Matrix rho_power_oracle(const Matrix& rho, cplx z) { return Matrix((z * rho.log()).exp()); }

ModularData random_gibbs(int n, double beta, oracle::Rng& rng) {
  return ModularData::gibbs(Operator(FockSpace(n), oracle::random_hermitian(n, rng) * 3.0), beta);
}

}  // namespace

TEST_CASE("polar decomposition S = J Delta^{1/2} on thermal states") {
  for (int n : {6, 12, 16}) {
    for (double wb : {0.4, 1.0, 2.0}) {
      const ModularData md = ModularData::thermal(FockSpace(n), ThermalSpec(1.0, wb));
      CHECK(polar_check(md) <= 1e-12);
    }
  }
  oracle::Rng rng(21);
  CHECK(polar_check(random_gibbs(5, 0.7, rng)) <= 1e-12);
}

TEST_CASE("S acts on Phi_ji by the Gibbs factor") {
  const FockSpace s(8);
  const ThermalSpec spec(1.0, 1.3);
  const ModularData md = ModularData::thermal(s, spec);
  const AntilinearMap sop = tomita_s(md);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) {
      const double f = std::exp(-(j - i) * spec.omega * spec.beta / 2.0);
      CHECK(hs_norm(sop(basis_element(j, i, s)) - basis_element(i, j, s) * f) <= 1e-13 * f);
    }
  }
}

TEST_CASE("modular operator and conjugation against oracles") {
  oracle::Rng rng(23);
  const int n = 4;
  const ModularData md = random_gibbs(n, 0.9, rng);
  const Matrix& rho = md.rho().matrix();
  const Matrix rinv = rho.inverse();
  const Matrix ref = oracle::superop_matrix(n, [&](const Matrix& e) { return Matrix(rho * e * rinv); });
  CHECK((modular_operator(md).to_dense() - ref).norm() < 1e-10 * ref.norm());
  CHECK((md.rho_power(0.5).matrix() - rho_power_oracle(rho, 0.5)).norm() < 1e-12);

  const FockSpace s(n);
  const AntilinearMap j = modular_conjugation(s);
  const HSOperator x(s, oracle::random_matrix(n, rng)), y(s, oracle::random_matrix(n, rng));
  CHECK((j(x).matrix() - x.matrix().adjoint()).norm() < 1e-15);
  CHECK(std::abs(hs_inner(j(x), j(y)) - std::conj(hs_inner(x, y))) < 1e-13);
  CHECK((j.compose(j)(x).matrix() - x.matrix()).norm() < 1e-15);
  CHECK_FALSE(j.compose(j).conjugates());

  const AntilinearMap sop = tomita_s(md);
  CHECK((sop(x).matrix() - rho_power_oracle(rho, -0.5) * x.matrix().adjoint() * rho_power_oracle(rho, 0.5)).norm() < 1e-10);
  // S^2 = 1 and <X, S Y> = <Y, F X>.
  CHECK((sop.compose(sop)(x).matrix() - x.matrix()).norm() < 1e-10);
  const AntilinearMap f = tomita_f(md);
  CHECK(std::abs(hs_inner(x, sop(y)) - hs_inner(y, f(x))) < 1e-10);
  // J Delta J = Delta^{-1}.
  const AntilinearMap jdj = j.compose(modular_operator(md)).compose(j);
  CHECK((jdj(x).matrix() - modular_power(md, -1.0)(x).matrix()).norm() < 1e-10);
  // Delta^{1/2} = J S, and S = J Delta^{1/2} also read through the free compose.
  CHECK((modular_power(md, 0.5)(x).matrix() - j.compose(sop)(x).matrix()).norm() < 1e-10);
  CHECK((compose(modular_power(md, -0.5), j)(x).matrix() - sop(x).matrix()).norm() < 1e-10);
}

TEST_CASE("modular flow is rho^{it} . rho^{-it}") {
  oracle::Rng rng(29);
  const ModularData md = random_gibbs(5, 1.1, rng);
  const FockSpace s(5);
  const Operator a(s, oracle::random_matrix(5, rng));
  for (double t : {-0.7, 0.0, 1.9}) {
    const Matrix u = rho_power_oracle(md.rho().matrix(), cplx(0.0, t));
    const Matrix expect = u * a.matrix() * u.inverse();
    CHECK((modular_flow(md, t)(HSOperator(a)).matrix() - expect).norm() < 1e-10);
  }
  // Group law and the cyclic vector is invariant.
  const Matrix lhs = (modular_flow(md, 0.3) * modular_flow(md, 0.5)).to_dense();
  CHECK((lhs - modular_flow(md, 0.8).to_dense()).norm() < 1e-10);
  CHECK(hs_norm(modular_flow(md, 0.9)(md.cyclic_vector()) - md.cyclic_vector()) < 1e-12);
  // Heisenberg flow at real time against the exponential.
  const Matrix h = md.hamiltonian().matrix();
  const Matrix e = (cplx(0.0, 0.6) * h).exp();
  CHECK((heisenberg_flow(md, a, 0.6).matrix() - e * a.matrix() * e.adjoint()).norm() < 1e-10);
}

TEST_CASE("KMS condition") {
  oracle::Rng rng(31);
  const FockSpace s(10);
  const ModularData md = ModularData::thermal(s, ThermalSpec(1.0, 1.0));
  for (int k = 0; k < 5; ++k) {
    const Operator a(s, oracle::random_hermitian(10, rng)), b(s, oracle::random_hermitian(10, rng));
    for (double t : {-1.0, 0.0, 0.5}) CHECK(kms_residual(md, a, b, t) <= 1e-12);
  }
  const ModularData gen = random_gibbs(6, 0.6, rng);
  const Operator a(FockSpace(6), oracle::random_hermitian(6, rng)), b(FockSpace(6), oracle::random_hermitian(6, rng));
  CHECK(kms_residual(gen, a, b, 0.4) <= 1e-12);
  // Non-commuting A, B and a wrong temperature break it.
  const ModularData hot = ModularData::thermal(s, ThermalSpec(1.0, 0.5));
  const Operator a10(s, oracle::random_hermitian(10, rng)), b10(s, oracle::random_hermitian(10, rng));
  const double right = kms_residual(md, a10, b10, 0.2);
  const cplx lhs = state_eval(hot, a10 * heisenberg_flow(md, b10, cplx(0.2, 1.0)));
  const cplx rhs = state_eval(hot, heisenberg_flow(md, b10, 0.2) * a10);
  CHECK(right <= 1e-12);
  CHECK(std::abs(lhs - rhs) > 1e-6);
}

TEST_CASE("the modular flow satisfies KMS at parameter -1") {
  oracle::Rng rng(37);
  const ModularData md = random_gibbs(5, 2.0, rng);
  const FockSpace s(5);
  const Operator a(s, oracle::random_hermitian(5, rng)), b(s, oracle::random_hermitian(5, rng));
  auto sigma = [&](cplx z) { return md.rho_power(cplx(0.0, 1.0) * z) * b * md.rho_power(-cplx(0.0, 1.0) * z); };
  const double t = 0.35;
  const cplx rhs = state_eval(md, sigma(t) * a);
  CHECK(std::abs(state_eval(md, a * sigma(cplx(t, -1.0))) - rhs) < 1e-12);
  CHECK(std::abs(state_eval(md, a * sigma(cplx(t, md.beta()))) - rhs) > 1e-6);
}

TEST_CASE("construction and validation") {
  const FockSpace s(4);
  const ModularData md = ModularData::thermal(s, ThermalSpec(1.0, 1.0));
  const ModularData back = ModularData::from_density(md.rho(), 1.0);
  CHECK((back.rho().matrix() - md.rho().matrix()).norm() < 1e-14);
  // H recovered up to an additive constant.
  const Matrix dh = back.hamiltonian().matrix() - md.hamiltonian().matrix();
  CHECK((dh - dh(0, 0) * Matrix::Identity(4, 4)).norm() < 1e-12);
  CHECK(std::abs(state_eval(md, Operator::identity(s)) - 1.0) < 1e-15);
  CHECK(md.eigenvalues().minCoeff() > 0.0);
  CHECK(hs_norm(md.cyclic_vector()) == doctest::Approx(1.0));
  CHECK(std::abs(hs_norm(md.eigen_basis_element(1, 2)) - 1.0) < 1e-14);

  Matrix pure = Matrix::Zero(4, 4);
  pure(0, 0) = 1.0;
  CHECK_THROWS_AS(ModularData::from_density(Operator(s, pure), 1.0), NotFaithful);
  CHECK_THROWS_AS(ModularData(md.rho(), 2.0, md.hamiltonian()), InvalidParameter);
  CHECK_THROWS_AS(ModularData(md.rho() * cplx(2.0), 1.0, md.hamiltonian()), InvalidParameter);
  CHECK_THROWS_AS(ModularData(md.rho(), -1.0, md.hamiltonian()), InvalidParameter);
  Matrix skew = md.rho().matrix();
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(ModularData(Operator(s, skew), 1.0, md.hamiltonian()), InvalidParameter);
  CHECK_THROWS_AS(ModularData(md.rho(), 1.0, Operator::identity(FockSpace(5))), DimensionError);
}

#include <doctest.h>

#include "hsqm/error.hpp"
#include "hsqm/hs_space.hpp"
#include "oracles.hpp"

using namespace hsqm;

TEST_CASE("row-major vectorization") {
  const FockSpace s(3);
  const HSOperator phi = basis_element(1, 2, s);
  const Vector v = phi.vec();
  CHECK(v(vec_index(1, 2, 3)) == cplx(1.0));
  CHECK(v.norm() == doctest::Approx(1.0));
  oracle::Rng rng(3);
  const Matrix x = oracle::random_matrix(3, rng);
  CHECK((unvectorize(vectorize(x), 3) - x).norm() == 0.0);
  CHECK(vectorize(x)(5) == x(1, 2));
  CHECK_THROWS_AS(basis_element(3, 0, s), InvalidParameter);
  CHECK_THROWS_AS(unvectorize(Vector::Zero(8), 3), DimensionError);
}

TEST_CASE("HS inner product is the trace form") {
  oracle::Rng rng(5);
  const FockSpace s(4);
  const HSOperator x(s, oracle::random_matrix(4, rng)), y(s, oracle::random_matrix(4, rng));
  CHECK(std::abs(hs_inner(x, y) - (x.matrix().adjoint() * y.matrix()).trace()) < 1e-14);
  CHECK(hs_norm(x) == doctest::Approx(std::sqrt((x.matrix().adjoint() * x.matrix()).trace().real())));
}

TEST_CASE("vee matrix agrees with its action") {
  oracle::Rng rng(7);
  const int n = 4;
  const FockSpace s(n);
  const Operator a(s, oracle::random_matrix(n, rng)), b(s, oracle::random_matrix(n, rng));
  const Matrix ref = oracle::superop_matrix(n, [&](const Matrix& e) { return Matrix(a.matrix() * e * b.matrix().adjoint()); });
  CHECK((vee_matrix(a.matrix(), b.matrix()) - ref).norm() < 1e-13);
  const SuperOp op = vee(a, b);
  CHECK((op.to_dense() - ref).norm() < 1e-13);
  const HSOperator x(s, oracle::random_matrix(n, rng));
  CHECK((op(x).matrix() - a.matrix() * x.matrix() * b.matrix().adjoint()).norm() < 1e-13);

  SUBCASE("adjoint and composition stay factored") {
    const SuperOp adj = op.adjoint();
    CHECK(adj.is_factored());
    CHECK((adj.to_dense() - ref.adjoint()).norm() < 1e-13);
    const Operator c(s, oracle::random_matrix(n, rng)), d(s, oracle::random_matrix(n, rng));
    const SuperOp comp = op * vee(c, d);
    CHECK(comp.is_factored());
    CHECK((comp.to_dense() - ref * vee_matrix(c.matrix(), d.matrix())).norm() < 1e-12);
  }
  SUBCASE("sums fall back to dense") {
    const SuperOp sum = op + SuperOp::identity(s);
    CHECK_FALSE(sum.is_factored());
    CHECK((sum.to_dense() - ref - Matrix::Identity(n * n, n * n)).norm() < 1e-13);
    CHECK_THROWS_AS(sum.factors(), Error);
    CHECK(((op - op).to_dense()).norm() < 1e-15);
    CHECK(((op * cplx(2.0)).to_dense() - 2.0 * ref).norm() < 1e-13);
  }
}

TEST_CASE("left and right actions") {
  oracle::Rng rng(9);
  const FockSpace s(3);
  const Operator a(s, oracle::random_matrix(3, rng));
  const HSOperator x(s, oracle::random_matrix(3, rng));
  CHECK((left_action(a)(x).matrix() - a.matrix() * x.matrix()).norm() < 1e-14);
  CHECK((right_action(a)(x).matrix() - x.matrix() * a.matrix()).norm() < 1e-14);
  // Left and right actions commute.
  const Operator b(s, oracle::random_matrix(3, rng));
  const Matrix lr = left_action(a).to_dense() * right_action(b).to_dense();
  const Matrix rl = right_action(b).to_dense() * left_action(a).to_dense();
  CHECK((lr - rl).norm() < 1e-13);
}

TEST_CASE("ket_bra is the rank-one map") {
  oracle::Rng rng(13);
  const FockSpace s(3);
  const HSOperator x(s, oracle::random_matrix(3, rng)), y(s, oracle::random_matrix(3, rng)), z(s, oracle::random_matrix(3, rng));
  const HSOperator got = ket_bra(x, y)(z);
  CHECK((got.matrix() - hs_inner(y, z) * x.matrix()).norm() < 1e-13);
  CHECK_THROWS_AS(ket_bra(x, HSOperator(Operator::identity(FockSpace(4)))), DimensionError);
  CHECK_THROWS_AS(vee(Operator::identity(s), Operator::identity(FockSpace(4))), DimensionError);
}

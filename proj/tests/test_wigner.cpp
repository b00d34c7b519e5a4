#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsqm/error.hpp"
#include "hsqm/wigner.hpp"
#include "oracles.hpp"

using namespace hsqm;

namespace {

// e^{-i(xQ + yP)} on n levels from explicit Q and P.
Matrix weyl_expm(int n, double x, double y) {
  const Matrix a = oracle::lowering(n);
  const Matrix q = (a + a.adjoint()) / std::sqrt(2.0);
  const Matrix p = (a - a.adjoint()) / cplx(0.0, std::sqrt(2.0));
  return Matrix((cplx(0.0, -1.0) * (x * q + y * p)).exp());
}

HSOperator random_block(FockSpace s, int block, oracle::Rng& rng) {
  Matrix m = Matrix::Zero(s.dim(), s.dim());
  for (int i = 0; i < block; ++i)
    for (int j = 0; j < block; ++j) m(i, j) = rng.complex_box();
  return HSOperator(s, m);
}

}  // namespace

TEST_CASE("phase point conventions") {
  const PhasePoint p{0.3, -1.2};
  const PhasePoint back = PhasePoint::from_alpha(p.alpha());
  CHECK(back.x == doctest::Approx(p.x));
  CHECK(back.y == doctest::Approx(p.y));
  const PhasePoint polar = PhasePoint::from_polar(0.8, 1.1);
  CHECK((polar.x * polar.x + polar.y * polar.y) / 2.0 == doctest::Approx(0.8));
  CHECK(std::arg(polar.alpha()) == doctest::Approx(1.1));
}

TEST_CASE("Weyl operator against the exponential of the quadratures") {
  const PhasePoint p{0.4, -0.7};
  const Matrix ref = weyl_expm(60, p.x, p.y).topLeftCorner(10, 10);
  CHECK((weyl_operator(FockSpace(60), p).matrix().topLeftCorner(10, 10) - ref).norm() < 1e-12);
}

TEST_CASE("Wigner transform is the normalized trace pairing") {
  oracle::Rng rng(41);
  const FockSpace s(8);
  const HSOperator x = random_block(s, 4, rng);
  for (int k = 0; k < 4; ++k) {
    const PhasePoint p{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const Matrix u = weyl_expm(60, p.x, p.y).topLeftCorner(8, 8);
    const cplx ref = (u.adjoint() * x.matrix()).trace() / std::sqrt(2.0 * std::numbers::pi);
    CHECK(std::abs(wigner_transform(x, p) - ref) < 1e-12);
  }
}

TEST_CASE("Gram matrix and round trip on the half block") {
  for (int n : {8, 16}) {
    const FockSpace s(n);
    const QuadratureScheme q = QuadratureScheme::defaults(s);
    const Matrix g = wigner_gram(s, n / 2, q);
    CHECK((g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(roundtrip_residual(s, n / 2, q) <= 1e-10);
  }
}

TEST_CASE("inverse map and Parseval on random operators") {
  oracle::Rng rng(43);
  const FockSpace s(12);
  const QuadratureScheme q = QuadratureScheme::defaults(s);
  const HSOperator x = random_block(s, 6, rng), y = random_block(s, 6, rng);
  CHECK(unitarity_residual(x, y, q) <= 1e-10);
  const HSOperator back = wigner_inverse([&](const PhasePoint& p) { return wigner_transform(x, p); }, q, s);
  CHECK(hs_norm(back - x) <= 1e-10);
  // Linearity of W.
  const PhasePoint p{0.2, 0.9};
  CHECK(std::abs(wigner_transform(x + y * cplx(0, 2), p) - wigner_transform(x, p) - cplx(0, 2) * wigner_transform(y, p)) < 1e-14);
  const Vector samples = wigner_samples(x, q);
  CHECK(samples.size() == q.radial() * q.angular());
}

TEST_CASE("lifted unitaries commute and are unitary on the safe block") {
  const FockSpace s(30);
  const auto [left, right] = lifted_unitaries(s, PhasePoint{0.3, 0.2});
  oracle::Rng rng(47);
  const HSOperator x = random_block(s, 5, rng);
  CHECK(hs_norm(left(right(x)) - right(left(x))) < 1e-12);
  CHECK(hs_norm(left(x)) == doctest::Approx(hs_norm(x)).epsilon(1e-10));
  CHECK(hs_norm(right(x)) == doctest::Approx(hs_norm(x)).epsilon(1e-10));
}

TEST_CASE("wigner errors") {
  const FockSpace s(8);
  CHECK_THROWS_AS(wigner_gram(s, 9, QuadratureScheme::defaults(s)), InvalidParameter);
  CHECK_THROWS_AS(wigner_gram(s, 4, QuadratureScheme(4, 5)), InvalidParameter);
  CHECK_THROWS_AS(wigner_inverse([](const PhasePoint&) { return cplx(0.0); }, QuadratureScheme(4, 5), s), InvalidParameter);
}

#include <doctest.h>

#include <cmath>

#include "hsqm/error.hpp"
#include "hsqm/thermal_cs.hpp"
#include "oracles.hpp"

using namespace hsqm;

TEST_CASE("thermal vector") {
  const FockSpace s(10);
  const ThermalSpec spec(1.0, 0.7);
  const HSOperator phi = thermal_vector(s, spec);
  CHECK(hs_norm(phi) == doctest::Approx(1.0));
  CHECK((phi.matrix() * phi.matrix() - gibbs_density(s, spec).matrix()).norm() < 1e-15);
}

TEST_CASE("thermal coherent states") {
  const FockSpace s(40);
  const ThermalSpec spec(1.0, 1.0);
  const double nbar = 1.0 / std::expm1(spec.omega * spec.beta);
  oracle::Rng rng(53);
  for (int k = 0; k < 6; ++k) {
    const cplx z1 = rng.disc(safe_radius(s)), z2 = rng.disc(safe_radius(s));
    const ThermalCS a = thermal_cs(s, spec, z1), b = thermal_cs(s, spec, z2);
    CHECK(std::abs(hs_norm(a.state) - 1.0) < 1e-10);
    // Overlap law of displaced thermal states.
    const cplx w = z2 - z1;
    const cplx expect = std::exp(0.5 * (std::conj(z1) * z2 - z1 * std::conj(z2))) * std::exp(-std::norm(w) * (nbar + 0.5));
    CHECK(std::abs(hs_inner(a.state, b.state) - expect) < 1e-10);
  }
  // S_beta needs a faithful truncated state: lambda_{N-1} above 1e-14 lambda_0.
  const FockSpace small(24);
  for (int k = 0; k < 6; ++k) CHECK(s_beta_reflection(small, spec, rng.disc(safe_radius(small))) <= 1e-9);
  CHECK(thermal_cs(s, spec, 0.0).state.matrix() == thermal_vector(s, spec).matrix());
  CHECK_THROWS_AS(thermal_cs(s, spec, cplx(safe_radius(s) * 1.01, 0.0)), InvalidParameter);
}

TEST_CASE("thermal CS integrate to right multiplication by rho") {
  for (int n : {12, 16}) {
    const FockSpace s(n);
    const ThermalSpec spec(1.0, 1.0);
    const QuadratureScheme q = QuadratureScheme::defaults(s);
    CHECK(right_density_residual(s, spec, q) <= 1e-10);
    CHECK(hilbert_resolution_residual(s, spec, q) <= 1e-10);
    // Against the identity the block deviates by 1 - min_j lambda_j.
    const auto lambda = thermal_weights(s, spec);
    const int b = resolution_block_size(s);
    double expected = 0.0;
    for (int j = 0; j < b; ++j) expected = std::max(expected, std::abs(1.0 - lambda[j]));
    CHECK(resolution_residual(s, spec, q) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(mirrored_resolution_residual(s, spec, q) == doctest::Approx(expected).epsilon(1e-9));
    const Matrix r = resolution_block(s, spec, q, b);
    const Matrix m = resolution_block(s, spec, q, b, true);
    CHECK((r - m).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(resolution_block(FockSpace(8), ThermalSpec(1.0, 1.0), QuadratureScheme::defaults(FockSpace(8)), 9),
                  InvalidParameter);
}

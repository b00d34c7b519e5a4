#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the closed forms under test.

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "hsqm/fock.hpp"

namespace oracle {

using hsqm::cplx;
using hsqm::Matrix;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  cplx complex_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
  cplx disc(double radius) { return std::polar(radius * std::sqrt(uniform()), 2.0 * M_PI * uniform()); }

 private:
  std::mt19937_64 eng_;
};

inline Matrix random_matrix(int n, Rng& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.complex_box();
  return m;
}

inline Matrix random_hermitian(int n, Rng& rng) {
  Matrix m = random_matrix(n, rng);
  Matrix h = 0.5 * (m + m.adjoint());
  return h / h.norm();
}

inline Matrix random_unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, rng));
  return qr.householderQ() * Matrix::Identity(n, n);
}

// Ladder matrices written out entry by entry.
inline Matrix lowering(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// exp(alpha a^dagger - conj(alpha) a) on n levels via Eigen's Pade exponential.
inline Matrix displacement_expm(int n, cplx alpha) {
  const Matrix a = lowering(n);
  const Matrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
  return gen.exp();
}

// X -> A X B^dagger as an explicit N^2 x N^2 matrix built from basis images.
template <class F>
Matrix superop_matrix(int n, F&& map) {
  Matrix out(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      const Matrix img = map(e);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r * n + c, i * n + j) = img(r, c);
    }
  }
  return out;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace oracle

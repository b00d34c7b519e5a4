#include "hsqm/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hsqm/error.hpp"

namespace hsqm {

FockSpace::FockSpace(int dim) : dim_(dim) {
  if (dim < 2) {
    throw InvalidParameter("FockSpace: dimension must be at least 2, got " + std::to_string(dim));
  }
}

Operator::Operator(FockSpace space, Matrix entries) : space_(space), m_(std::move(entries)) {
  if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
    throw DimensionError("Operator: expected " + std::to_string(space_.dim()) + "x" +
                         std::to_string(space_.dim()) + " entries, got " + std::to_string(m_.rows()) +
                         "x" + std::to_string(m_.cols()));
  }
  if (!m_.allFinite()) throw InvalidParameter("Operator: non-finite entry");
}

Operator Operator::identity(FockSpace space) {
  return Operator(space, Matrix::Identity(space.dim(), space.dim()));
}

Operator Operator::zero(FockSpace space) {
  return Operator(space, Matrix::Zero(space.dim(), space.dim()));
}

Operator Operator::adjoint() const { return Operator(space_, m_.adjoint()); }

namespace {

void require_same_space(const Operator& a, const Operator& b) {
  if (a.space() != b.space()) {
    throw DimensionError("Operator: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Operator Operator::operator*(const Operator& rhs) const {
  require_same_space(*this, rhs);
  return Operator(space_, m_ * rhs.m_);
}

Operator Operator::operator+(const Operator& rhs) const {
  require_same_space(*this, rhs);
  return Operator(space_, m_ + rhs.m_);
}

Operator Operator::operator-(const Operator& rhs) const {
  require_same_space(*this, rhs);
  return Operator(space_, m_ - rhs.m_);
}

Operator Operator::operator*(cplx s) const { return Operator(space_, m_ * s); }

ThermalSpec::ThermalSpec(double omega_, double beta_) : omega(omega_), beta(beta_) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidParameter("ThermalSpec: omega must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidParameter("ThermalSpec: beta must be positive");
}

Operator annihilation(FockSpace space) {
  const int n = space.dim();
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return Operator(space, std::move(a));
}

Operator creation(FockSpace space) { return annihilation(space).adjoint(); }

Operator number(FockSpace space) {
  const int n = space.dim();
  Matrix d = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) d(k, k) = static_cast<double>(k);
  return Operator(space, std::move(d));
}

Operator position(FockSpace space) {
  const Operator a = annihilation(space);
  return (a + a.adjoint()) * cplx(1.0 / std::sqrt(2.0));
}

Operator momentum(FockSpace space) {
  const Operator a = annihilation(space);
  return (a - a.adjoint()) * (cplx(0.0, -1.0) / std::sqrt(2.0));
}

Operator osc_hamiltonian(FockSpace space, double omega) {
  if (!(omega > 0.0)) throw InvalidParameter("osc_hamiltonian: omega must be positive");
  const int n = space.dim();
  Matrix h = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) h(k, k) = omega * (k + 0.5);
  return Operator(space, std::move(h));
}

double laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw InvalidParameter("laguerre: negative degree or order");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx displacement_element(int m, int n, cplx alpha) {
  if (m < n) return std::conj(displacement_element(n, m, -alpha));
  const int k = m - n;
  const double r2 = std::norm(alpha);
  if (r2 == 0.0) return k == 0 ? cplx(1.0) : cplx(0.0);
  // sqrt(n!/m!) |alpha|^k e^{-|alpha|^2/2}, assembled in log form.
  const double log_mag =
      0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) + 0.5 * k * std::log(r2) - 0.5 * r2;
  const cplx phase = std::polar(1.0, k * std::arg(alpha));
  return std::exp(log_mag) * laguerre(n, k, r2) * phase;
}

Operator displacement(FockSpace space, cplx alpha) {
  const int n = space.dim();
  Matrix d(n, n);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) d(row, col) = displacement_element(row, col, alpha);
  }
  return Operator(space, std::move(d));
}

std::vector<double> thermal_weights(FockSpace space, const ThermalSpec& spec) {
  const double x = spec.omega * spec.beta;
  std::vector<double> w(space.dim());
  for (int k = 0; k < space.dim(); ++k) w[k] = std::exp(-k * x);
  const double z = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= z;
  return w;
}

Operator gibbs_density(FockSpace space, const ThermalSpec& spec) {
  const auto w = thermal_weights(space, spec);
  Matrix rho = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) rho(k, k) = w[k];
  return Operator(space, std::move(rho));
}

}  // namespace hsqm

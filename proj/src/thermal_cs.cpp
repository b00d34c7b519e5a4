#include "hsqm/thermal_cs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hsqm/error.hpp"
#include "hsqm/parallel.hpp"
#include "hsqm/wigner.hpp"

namespace hsqm {

namespace {

double operator_norm_hermitian(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

// Sum over nodes of weight * v_k v_k^dagger, reduced in node order per entry.
Matrix weighted_outer_sum(const Matrix& samples, const Eigen::VectorXd& weights) {
  return samples * weights.asDiagonal() * samples.adjoint();
}

}  // namespace

double safe_radius(FockSpace space) { return std::sqrt(static_cast<double>(space.dim())) / 4.0; }

HSOperator thermal_vector(FockSpace space, const ThermalSpec& spec) {
  const auto w = thermal_weights(space, spec);
  Matrix phi = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) phi(k, k) = std::sqrt(w[k]);
  return HSOperator(space, std::move(phi));
}

ThermalCS thermal_cs(FockSpace space, const ThermalSpec& spec, cplx z) {
  if (std::abs(z) > safe_radius(space)) {
    throw InvalidParameter("thermal_cs: |z| = " + std::to_string(std::abs(z)) + " exceeds safe radius " +
                           std::to_string(safe_radius(space)));
  }
  const HSOperator phi = thermal_vector(space, spec);
  return ThermalCS{spec, z, HSOperator(displacement(space, z) * phi.op())};
}

int resolution_block_size(FockSpace space) { return space.dim() / 4 + 1; }

Matrix resolution_block(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q, int block,
                        bool mirrored) {
  q.require_covers(space);
  if (block < 1 || block > space.dim()) throw InvalidParameter("resolution_block: block outside [1, N]");
  const auto lambda = thermal_weights(space, spec);
  const auto nodes = q.plane_nodes();
  const double sign = mirrored ? -1.0 : 1.0;
  Matrix samples(static_cast<Eigen::Index>(block) * block, static_cast<Eigen::Index>(nodes.size()));
  Eigen::VectorXd weights(static_cast<Eigen::Index>(nodes.size()));
  parallel_for(nodes.size(), [&](std::size_t k) {
    const auto col = static_cast<Eigen::Index>(k);
    const cplx z = sign * PhasePoint::from_polar(nodes[k].t, nodes[k].phi).alpha();
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j < block; ++j) samples(vec_index(i, j, block), col) = displacement_element(i, j, z) * std::sqrt(lambda[j]);
    }
    weights(col) = nodes[k].weight / (2.0 * std::numbers::pi);
  });
  return weighted_outer_sum(samples, weights);
}

double resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q) {
  const int b = resolution_block_size(space);
  const Matrix r = resolution_block(space, spec, q, b, false);
  return operator_norm_hermitian(r - Matrix::Identity(r.rows(), r.cols()));
}

double mirrored_resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q) {
  const int b = resolution_block_size(space);
  const Matrix r = resolution_block(space, spec, q, b, true);
  return operator_norm_hermitian(r - Matrix::Identity(r.rows(), r.cols()));
}

double right_density_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q) {
  const int b = resolution_block_size(space);
  const auto lambda = thermal_weights(space, spec);
  Matrix expected = Matrix::Zero(b * b, b * b);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) expected(vec_index(i, j, b), vec_index(i, j, b)) = lambda[j];
  }
  return operator_norm_hermitian(resolution_block(space, spec, q, b, false) - expected);
}

double hilbert_resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q) {
  q.require_covers(space);
  const int b = resolution_block_size(space);
  const int n = space.dim();
  const auto lambda = thermal_weights(space, spec);
  const auto nodes = q.plane_nodes();
  // Column k: rows i < b of D(z_k) rho^{1/2}, flattened over the full column range.
  Matrix samples(static_cast<Eigen::Index>(b) * n, static_cast<Eigen::Index>(nodes.size()));
  parallel_for(nodes.size(), [&](std::size_t k) {
    const auto col = static_cast<Eigen::Index>(k);
    const cplx z = PhasePoint::from_polar(nodes[k].t, nodes[k].phi).alpha();
    for (int i = 0; i < b; ++i) {
      for (int m = 0; m < n; ++m) samples(static_cast<Eigen::Index>(i) * n + m, col) = displacement_element(i, m, z) * std::sqrt(lambda[m]);
    }
  });
  Matrix acc = Matrix::Zero(b, b);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> rows(
        samples.col(col).data(), b, n);
    acc += (nodes[k].weight / (2.0 * std::numbers::pi)) * (rows * rows.adjoint());
  }
  return (acc - Matrix::Identity(b, b)).cwiseAbs().maxCoeff();
}

double s_beta_reflection(FockSpace space, const ThermalSpec& spec, cplx z) {
  const ModularData md = ModularData::thermal(space, spec);
  const AntilinearMap s = tomita_s(md);
  const ThermalCS plus = thermal_cs(space, spec, z);
  const ThermalCS minus = thermal_cs(space, spec, -z);
  return hs_norm(s(plus.state) - minus.state);
}

}  // namespace hsqm

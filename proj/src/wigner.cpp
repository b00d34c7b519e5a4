#include "hsqm/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hsqm/error.hpp"
#include "hsqm/parallel.hpp"

namespace hsqm {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

std::vector<PhasePoint> node_points(const std::vector<PlaneNode>& nodes) {
  std::vector<PhasePoint> pts;
  pts.reserve(nodes.size());
  for (const PlaneNode& nd : nodes) pts.push_back(PhasePoint::from_polar(nd.t, nd.phi));
  return pts;
}

// Column k holds vec(U(p_k)) restricted to rows/cols < dim.
Matrix weyl_columns(int dim, const std::vector<PhasePoint>& pts) {
  Matrix cols(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(pts.size()));
  parallel_for(pts.size(), [&](std::size_t k) {
    const cplx alpha = pts[k].alpha();
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) cols(vec_index(i, j, dim), static_cast<Eigen::Index>(k)) = displacement_element(i, j, alpha);
    }
  });
  return cols;
}

}  // namespace

cplx PhasePoint::alpha() const { return cplx(y, -x) / std::sqrt(2.0); }

PhasePoint PhasePoint::from_alpha(cplx a) {
  return PhasePoint{-std::sqrt(2.0) * a.imag(), std::sqrt(2.0) * a.real()};
}

PhasePoint PhasePoint::from_polar(double t, double phi) { return from_alpha(std::polar(std::sqrt(t), phi)); }

Operator weyl_operator(FockSpace space, const PhasePoint& p) { return displacement(space, p.alpha()); }

cplx wigner_transform(const HSOperator& x, const PhasePoint& p) {
  const cplx alpha = p.alpha();
  cplx tr = 0.0;
  // Tr[U^dagger X] = sum_ij conj(U_ij) X_ij over the nonzero entries of X.
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = 0; j < x.dim(); ++j) {
      if (x(i, j) != cplx(0.0)) tr += std::conj(displacement_element(i, j, alpha)) * x(i, j);
    }
  }
  return kInvSqrt2Pi * tr;
}

Vector wigner_samples(const HSOperator& x, const QuadratureScheme& q) {
  const auto pts = node_points(q.plane_nodes());
  Vector out(static_cast<Eigen::Index>(pts.size()));
  parallel_for(pts.size(), [&](std::size_t k) { out(static_cast<Eigen::Index>(k)) = wigner_transform(x, pts[k]); });
  return out;
}

HSOperator wigner_inverse(const PhaseFunction& f, const QuadratureScheme& q, FockSpace space) {
  q.require_covers(space);
  const auto nodes = q.plane_nodes();
  const auto pts = node_points(nodes);
  Vector weighted(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    weighted(static_cast<Eigen::Index>(k)) = nodes[k].weight * f(pts[k]);
  }
  const Vector v = kInvSqrt2Pi * (weyl_columns(space.dim(), pts) * weighted);
  return HSOperator::from_vec(space, v);
}

double unitarity_residual(const HSOperator& x, const HSOperator& y, const QuadratureScheme& q) {
  const auto nodes = q.plane_nodes();
  const Vector wx = wigner_samples(x, q);
  const Vector wy = wigner_samples(y, q);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    acc += nodes[k].weight * std::conj(wx(i)) * wy(i);
  }
  return std::abs(acc - hs_inner(x, y));
}

namespace {

// Rows: nodes; columns: W(Phi_nl)(p_k) for n, l < block.
Matrix basis_samples(int block, const std::vector<PhasePoint>& pts) {
  Matrix f(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(block) * block);
  parallel_for(pts.size(), [&](std::size_t k) {
    const cplx alpha = pts[k].alpha();
    for (int n = 0; n < block; ++n) {
      for (int l = 0; l < block; ++l) {
        f(static_cast<Eigen::Index>(k), vec_index(n, l, block)) = kInvSqrt2Pi * std::conj(displacement_element(n, l, alpha));
      }
    }
  });
  return f;
}

void require_block(FockSpace space, int block) {
  if (block < 1 || block > space.dim()) throw InvalidParameter("wigner: block size outside [1, N]");
}

}  // namespace

Matrix wigner_gram(FockSpace space, int block, const QuadratureScheme& q) {
  require_block(space, block);
  q.require_covers(space);
  const auto nodes = q.plane_nodes();
  const Matrix f = basis_samples(block, node_points(nodes));
  Eigen::VectorXd w(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) w(static_cast<Eigen::Index>(k)) = nodes[k].weight;
  return f.adjoint() * w.asDiagonal() * f;
}

double roundtrip_residual(FockSpace space, int block, const QuadratureScheme& q) {
  require_block(space, block);
  q.require_covers(space);
  const auto nodes = q.plane_nodes();
  const auto pts = node_points(nodes);
  Matrix f = basis_samples(block, pts);
  for (std::size_t k = 0; k < nodes.size(); ++k) f.row(static_cast<Eigen::Index>(k)) *= nodes[k].weight;
  const Matrix recovered = kInvSqrt2Pi * (weyl_columns(space.dim(), pts) * f);
  double worst = 0.0;
  for (int n = 0; n < block; ++n) {
    for (int l = 0; l < block; ++l) {
      Vector expected = Vector::Zero(static_cast<Eigen::Index>(space.dim()) * space.dim());
      expected(vec_index(n, l, space.dim())) = 1.0;
      worst = std::max(worst, (recovered.col(vec_index(n, l, block)) - expected).norm());
    }
  }
  return worst;
}

std::pair<SuperOp, SuperOp> lifted_unitaries(FockSpace space, const PhasePoint& p) {
  const Operator u = weyl_operator(space, p);
  const Operator id = Operator::identity(space);
  return {vee(u, id), vee(id, u.adjoint())};
}

}  // namespace hsqm

#include "hsqm/commutant.hpp"

#include <algorithm>
#include <string>

#include <Eigen/SVD>

#include "hsqm/error.hpp"
#include "hsqm/hs_space.hpp"

namespace hsqm {

namespace {

// Incremental orthonormal basis with two-pass Gram-Schmidt.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  bool add(const Matrix& m) {
    Vector v = vectorize(m);
    const double scale = v.norm();
    if (scale == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : vecs_) v -= b * b.dot(v);
    }
    // Candidates are products of unit-norm elements; a product that should
    // vanish comes out at rounding level, so the cutoff never drops below
    // the unit scale.
    const double r = v.norm();
    if (r <= kRankTolerance * std::max(scale, 1.0)) return false;
    vecs_.push_back(v / r);
    return true;
  }

  int size() const { return static_cast<int>(vecs_.size()); }

  Matrix element(int k) const { return unvectorize(vecs_[k], dim_); }

  AlgebraBasis basis() const {
    AlgebraBasis out;
    out.dim = dim_;
    for (int k = 0; k < size(); ++k) out.basis.push_back(element(k));
    return out;
  }

 private:
  int dim_;
  std::vector<Vector> vecs_;
};

// Rank of a matrix under the relative singular value cutoff.
int numerical_rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > kRankTolerance * s(0)) ++rank;
  }
  return rank;
}

}  // namespace

AlgebraGens::AlgebraGens(int dim_, std::vector<Matrix> generators_)
    : dim(dim_), generators(std::move(generators_)) {
  if (dim < 1) throw InvalidParameter("AlgebraGens: dimension must be positive");
  if (generators.empty()) throw InvalidParameter("AlgebraGens: no generators");
  for (const Matrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw DimensionError("AlgebraGens: generator is not " + std::to_string(dim) + "x" +
                           std::to_string(dim));
    }
  }
}

Matrix AlgebraBasis::columns() const {
  Matrix cols(static_cast<Eigen::Index>(dim) * dim, size());
  for (int k = 0; k < size(); ++k) cols.col(k) = vectorize(basis[k]);
  return cols;
}

double AlgebraBasis::distance(const Matrix& m) const {
  const Vector v = vectorize(m);
  if (basis.empty()) return v.norm();
  const Matrix q = columns();
  return (v - q * (q.adjoint() * v)).norm();
}

bool AlgebraBasis::contains(const Matrix& m, double tol) const {
  return distance(m) <= tol * std::max(1.0, m.norm());
}

AlgebraBasis algebra_span(const AlgebraGens& gens) {
  SpanBuilder span(gens.dim);
  span.add(Matrix::Identity(gens.dim, gens.dim));
  for (const Matrix& g : gens.generators) {
    const double norm = g.norm();
    if (norm == 0.0) continue;
    span.add(g / norm);
    span.add(g.adjoint() / norm);
  }
  // Each round multiplies every pair; the dimension is bounded by d^2.
  const int max_rounds = gens.dim * gens.dim;
  for (int round = 0; round < max_rounds; ++round) {
    const int before = span.size();
    std::vector<Matrix> current;
    current.reserve(before);
    for (int k = 0; k < before; ++k) current.push_back(span.element(k));
    for (const Matrix& a : current) {
      for (const Matrix& b : current) span.add(a * b);
    }
    if (span.size() == before) break;
  }
  return span.basis();
}

AlgebraBasis commutant_basis(const AlgebraBasis& alg) {
  const int d = alg.dim;
  const int d2 = d * d;
  AlgebraBasis out;
  out.dim = d;
  if (alg.basis.empty()) {
    for (int k = 0; k < d2; ++k) {
      Matrix e = Matrix::Zero(d, d);
      e(k / d, k % d) = 1.0;
      out.basis.push_back(e);
    }
    return out;
  }
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(alg.size()) * d2, d2);
  for (int k = 0; k < alg.size(); ++k) {
    const Matrix& g = alg.basis[k];
    // vec(XG) = (I kron G^T) vec(X), vec(GX) = (G kron I) vec(X)
    stacked.block(static_cast<Eigen::Index>(k) * d2, 0, d2, d2) =
        vee_matrix(id, g.adjoint()) - vee_matrix(g, id);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  // Basis elements have unit norm, so an all-commuting algebra gives an
  // all-zero stack; the floor of 1 keeps the cutoff meaningful there.
  const double cutoff = kRankTolerance * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) ++rank;
  }
  const Matrix& v = svd.matrixV();
  for (int k = rank; k < d2; ++k) out.basis.push_back(unvectorize(v.col(k), d));
  return out;
}

int intersection_dim(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (a.dim != b.dim) throw DimensionError("intersection_dim: ambient dimension mismatch");
  if (a.basis.empty() || b.basis.empty()) return 0;
  const Matrix overlap = a.columns().adjoint() * b.columns();
  Eigen::JacobiSVD<Matrix> svd(overlap);
  int count = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) > 1.0 - 1e-8) ++count;
  }
  return count;
}

bool is_factor(const AlgebraBasis& alg) { return intersection_dim(alg, commutant_basis(alg)) == 1; }

namespace {

Matrix orbit(const AlgebraBasis& alg, const Vector& phi) {
  if (phi.size() != alg.dim) throw DimensionError("vector length does not match algebra dimension");
  Matrix cols(alg.dim, alg.size());
  for (int k = 0; k < alg.size(); ++k) cols.col(k) = alg.basis[k] * phi;
  return cols;
}

}  // namespace

bool check_cyclic(const AlgebraBasis& alg, const Vector& phi) {
  return numerical_rank(orbit(alg, phi)) == alg.dim;
}

bool check_separating(const AlgebraBasis& alg, const Vector& phi) {
  return numerical_rank(orbit(alg, phi)) == alg.size();
}

namespace {

AlgebraGens side_gens(FockSpace space, bool left) {
  const int n = space.dim();
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      const Operator op(space, e);
      gens.push_back(left ? left_action(op).to_dense() : vee(Operator::identity(space), op).to_dense());
    }
  }
  return AlgebraGens(n * n, std::move(gens));
}

}  // namespace

AlgebraGens left_algebra_gens(FockSpace space) { return side_gens(space, true); }

AlgebraGens right_algebra_gens(FockSpace space) { return side_gens(space, false); }

}  // namespace hsqm

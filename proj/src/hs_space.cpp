#include "hsqm/hs_space.hpp"

#include <cmath>
#include <string>

#include "hsqm/error.hpp"

namespace hsqm {

Vector vectorize(const Matrix& x) {
  const int n = static_cast<int>(x.rows());
  Vector v(n * x.cols());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < x.cols(); ++c) v(r * x.cols() + c) = x(r, c);
  }
  return v;
}

Matrix unvectorize(const Vector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionError("unvectorize: length " + std::to_string(v.size()) + " is not " +
                         std::to_string(dim) + "^2");
  }
  Matrix x(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) x(r, c) = v(r * dim + c);
  }
  return x;
}

HSOperator HSOperator::from_vec(FockSpace space, const Vector& v) {
  return HSOperator(space, unvectorize(v, space.dim()));
}

Vector HSOperator::vec() const { return vectorize(matrix()); }

cplx hs_inner(const HSOperator& x, const HSOperator& y) {
  if (x.space() != y.space()) {
    throw DimensionError("hs_inner: dimension mismatch " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
  }
  // Tr[X^dagger Y] = sum_ij conj(X_ij) Y_ij
  return (x.matrix().conjugate().cwiseProduct(y.matrix())).sum();
}

double hs_norm(const HSOperator& x) { return x.matrix().norm(); }

HSOperator basis_element(int n, int l, FockSpace space) {
  if (n < 0 || l < 0 || n >= space.dim() || l >= space.dim()) {
    throw InvalidParameter("basis_element: index (" + std::to_string(n) + "," + std::to_string(l) +
                           ") outside dimension " + std::to_string(space.dim()));
  }
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  m(n, l) = 1.0;
  return HSOperator(space, std::move(m));
}

Matrix vee_matrix(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.rows();
  Matrix out(n * m, a.cols() * b.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * m, k * b.cols(), m, b.cols()) = a(i, k) * b.conjugate();
    }
  }
  return out;
}

SuperOp SuperOp::identity(FockSpace space) {
  return vee(Operator::identity(space), Operator::identity(space));
}

SuperOp SuperOp::vee(const Operator& a, const Operator& b) {
  if (a.space() != b.space()) throw DimensionError("vee: factor dimension mismatch");
  return SuperOp(a.space(), Factored{a, b});
}

SuperOp SuperOp::dense(FockSpace space, Matrix m) {
  const Eigen::Index d = static_cast<Eigen::Index>(space.dim()) * space.dim();
  if (m.rows() != d || m.cols() != d) {
    throw DimensionError("SuperOp::dense: expected " + std::to_string(d) + "x" + std::to_string(d));
  }
  return SuperOp(space, std::move(m));
}

std::pair<const Operator&, const Operator&> SuperOp::factors() const {
  const auto* f = std::get_if<Factored>(&rep_);
  if (f == nullptr) throw Error("SuperOp::factors: superoperator is dense");
  return {f->a, f->b};
}

void SuperOp::require_same_space(const SuperOp& rhs) const {
  if (space_ != rhs.space_) throw DimensionError("SuperOp: dimension mismatch");
}

HSOperator SuperOp::apply(const HSOperator& x) const {
  if (x.space() != space_) throw DimensionError("SuperOp::apply: dimension mismatch");
  if (const auto* f = std::get_if<Factored>(&rep_)) {
    return HSOperator(space_, f->a.matrix() * x.matrix() * f->b.matrix().adjoint());
  }
  return HSOperator::from_vec(space_, std::get<Matrix>(rep_) * x.vec());
}

SuperOp SuperOp::adjoint() const {
  if (const auto* f = std::get_if<Factored>(&rep_)) return SuperOp(space_, Factored{f->a.adjoint(), f->b.adjoint()});
  return SuperOp(space_, Matrix(std::get<Matrix>(rep_).adjoint()));
}

SuperOp SuperOp::compose(const SuperOp& rhs) const {
  require_same_space(rhs);
  const auto* f = std::get_if<Factored>(&rep_);
  const auto* g = std::get_if<Factored>(&rhs.rep_);
  if (f != nullptr && g != nullptr) return SuperOp(space_, Factored{f->a * g->a, f->b * g->b});
  return SuperOp(space_, Matrix(to_dense() * rhs.to_dense()));
}

SuperOp SuperOp::operator+(const SuperOp& rhs) const {
  require_same_space(rhs);
  return SuperOp(space_, Matrix(to_dense() + rhs.to_dense()));
}

SuperOp SuperOp::operator-(const SuperOp& rhs) const {
  require_same_space(rhs);
  return SuperOp(space_, Matrix(to_dense() - rhs.to_dense()));
}

SuperOp SuperOp::operator*(cplx s) const {
  if (const auto* f = std::get_if<Factored>(&rep_)) return SuperOp(space_, Factored{f->a * s, f->b});
  return SuperOp(space_, Matrix(std::get<Matrix>(rep_) * s));
}

Matrix SuperOp::to_dense() const {
  if (const auto* f = std::get_if<Factored>(&rep_)) return vee_matrix(f->a.matrix(), f->b.matrix());
  return std::get<Matrix>(rep_);
}

SuperOp vee(const Operator& a, const Operator& b) { return SuperOp::vee(a, b); }

SuperOp left_action(const Operator& a) { return vee(a, Operator::identity(a.space())); }

SuperOp right_action(const Operator& a) { return vee(Operator::identity(a.space()), a.adjoint()); }

SuperOp ket_bra(const HSOperator& x, const HSOperator& y) {
  if (x.space() != y.space()) throw DimensionError("ket_bra: dimension mismatch");
  return SuperOp::dense(x.space(), x.vec() * y.vec().adjoint());
}

}  // namespace hsqm

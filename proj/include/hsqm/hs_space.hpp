#pragma once

#include <variant>

#include "hsqm/fock.hpp"

namespace hsqm {

/// An element of B2(H_N), the Hilbert space of Hilbert-Schmidt operators
/// with <X|Y>_2 = Tr[X^dagger Y].
///
/// Vectorization is row-major: Phi_nl = |n><l| maps to the unit coordinate
/// at index n*N + l. Every module uses this convention.
class HSOperator {
 public:
  explicit HSOperator(Operator base) : base_(std::move(base)) {}
  HSOperator(FockSpace space, Matrix entries) : base_(space, std::move(entries)) {}

  static HSOperator from_vec(FockSpace space, const Vector& v);

  const Operator& op() const noexcept { return base_; }
  const Matrix& matrix() const noexcept { return base_.matrix(); }
  const FockSpace& space() const noexcept { return base_.space(); }
  int dim() const noexcept { return base_.dim(); }
  cplx operator()(int row, int col) const { return base_(row, col); }

  Vector vec() const;

  HSOperator operator+(const HSOperator& rhs) const { return HSOperator(base_ + rhs.base_); }
  HSOperator operator-(const HSOperator& rhs) const { return HSOperator(base_ - rhs.base_); }
  HSOperator operator*(cplx s) const { return HSOperator(base_ * s); }
  friend HSOperator operator*(cplx s, const HSOperator& x) { return x * s; }

 private:
  Operator base_;
};

inline int vec_index(int n, int l, int dim) { return n * dim + l; }

Vector vectorize(const Matrix& x);
Matrix unvectorize(const Vector& v, int dim);

cplx hs_inner(const HSOperator& x, const HSOperator& y);
double hs_norm(const HSOperator& x);

/// Phi_nl = |n><l|.
HSOperator basis_element(int n, int l, FockSpace space);

/// Linear map on B2(H_N).
///
/// Either a single factored term A v B (X -> A X B^dagger), which composes
/// and adjoins exactly, or a dense N^2 x N^2 matrix in the row-major
/// vectorization. Mixed arithmetic falls back to the dense form; `to_dense`
/// is the explicit conversion.
class SuperOp {
 public:
  static SuperOp identity(FockSpace space);
  static SuperOp vee(const Operator& a, const Operator& b);
  static SuperOp dense(FockSpace space, Matrix m);

  const FockSpace& space() const noexcept { return space_; }
  bool is_factored() const noexcept { return std::holds_alternative<Factored>(rep_); }
  /// Factors (A, B) of a factored superoperator; throws for dense ones.
  std::pair<const Operator&, const Operator&> factors() const;

  HSOperator apply(const HSOperator& x) const;
  HSOperator operator()(const HSOperator& x) const { return apply(x); }

  SuperOp adjoint() const;
  /// (this o rhs)(X) = this(rhs(X)).
  SuperOp compose(const SuperOp& rhs) const;
  SuperOp operator*(const SuperOp& rhs) const { return compose(rhs); }
  SuperOp operator+(const SuperOp& rhs) const;
  SuperOp operator-(const SuperOp& rhs) const;
  SuperOp operator*(cplx s) const;

  Matrix to_dense() const;

 private:
  struct Factored {
    Operator a;
    Operator b;
  };

  SuperOp(FockSpace space, std::variant<Factored, Matrix> rep) : space_(space), rep_(std::move(rep)) {}
  void require_same_space(const SuperOp& rhs) const;

  FockSpace space_;
  std::variant<Factored, Matrix> rep_;
};

/// A v B: X -> A X B^dagger.
SuperOp vee(const Operator& a, const Operator& b);
/// A_l = A v I: X -> A X.
SuperOp left_action(const Operator& a);
/// I v A^dagger: X -> X A.
SuperOp right_action(const Operator& a);
/// Rank-one superoperator |X><Y| : Z -> <Y|Z>_2 X.
SuperOp ket_bra(const HSOperator& x, const HSOperator& y);

/// Dense kron(A, conj(B)), the matrix of A v B in row-major vectorization.
Matrix vee_matrix(const Matrix& a, const Matrix& b);

}  // namespace hsqm

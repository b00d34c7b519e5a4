#pragma once

#include <vector>

#include "hsqm/fock.hpp"

namespace hsqm {

/// Generators of a *-algebra of d x d matrices.
struct AlgebraGens {
  AlgebraGens(int dim, std::vector<Matrix> generators);

  int dim;
  std::vector<Matrix> generators;
};

/// Frobenius-orthonormal basis of a linear span of d x d matrices.
struct AlgebraBasis {
  int dim = 0;
  std::vector<Matrix> basis;

  int size() const noexcept { return static_cast<int>(basis.size()); }
  /// d^2 x size matrix whose columns are the vectorized basis elements.
  Matrix columns() const;
  /// Frobenius distance from m to the span.
  double distance(const Matrix& m) const;
  bool contains(const Matrix& m, double tol = 1e-10) const;
};

/// Singular values below this fraction of the largest are treated as zero.
inline constexpr double kRankTolerance = 1e-10;

/// Smallest unital *-algebra containing the generators, closed under
/// products by iterating until the dimension stops growing.
AlgebraBasis algebra_span(const AlgebraGens& gens);

/// {X : XG = GX for every G in alg}, as the null space of the stacked maps
/// X -> [X, G].
AlgebraBasis commutant_basis(const AlgebraBasis& alg);

/// Dimension of span(a) intersected with span(b), counted from principal
/// angles (singular values of the overlap equal to one).
int intersection_dim(const AlgebraBasis& a, const AlgebraBasis& b);

/// True when alg and its commutant share only the scalars.
bool is_factor(const AlgebraBasis& alg);

/// span{G phi : G in alg} is all of C^d.
bool check_cyclic(const AlgebraBasis& alg, const Vector& phi);
/// G -> G phi is injective on the span of alg.
bool check_separating(const AlgebraBasis& alg, const Vector& phi);

/// Left algebra {A v I} on B2(H_N), as N^2 x N^2 matrices.
AlgebraGens left_algebra_gens(FockSpace space);
/// Right algebra {I v A} on B2(H_N).
AlgebraGens right_algebra_gens(FockSpace space);

}  // namespace hsqm

#pragma once

/*
  Graded traces on polynomial rings. molien_trace gives the trace of a group
  element on Sym^d of the dual of a rational subspace (the coefficient of t^d
  in 1/det(1 − t·w^{-1})); averaging over the group recovers the classical
  Molien series. invariant_basis produces the canonical echelonized basis of
  degree-d invariants via the Reynolds operator.
*/

#include "cohint/poly.hpp"

namespace cohint {

// Trace of w on Sym^d(S*) where `m` is the matrix of w on S. For finite-order
// integer or rational matrices this is exact.
Q molien_trace(const QMat& m, Z degree);

// Matrix of w restricted to the subspace S (w must preserve S; throws
// otherwise).
QMat restrict_to_subspace(const GroupElement& w, const RationalSubspace& s);

// Dimension of degree-d invariants by Molien averaging.
Q molien_invariant_dimension(const FiniteGroup& w, Z degree);

// Canonical basis of degree-d W-invariant polynomials: columns over the
// monomial list, reduced column echelon.
QMat invariant_basis(const FiniteGroup& w, Z degree, const std::vector<Exponents>& monomials);

}  // namespace cohint

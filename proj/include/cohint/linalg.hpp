#pragma once

/*
  Exact dense linear algebra over the rationals, plus the two integer-lattice
  primitives the rest of the engine needs (kernel of an integer form matrix as
  a saturated sublattice, and completion of that kernel basis to a unimodular
  basis of Z^r).

  Everything is deterministic: pivots are chosen first-come, echelon forms are
  the canonical reduced ones, no randomization anywhere.
*/

#include <optional>
#include <utility>

#include "cohint/rational.hpp"

namespace cohint {

QMat q_identity(std::size_t n);
QMat q_from_z(const ZMat& m);
QVec q_from_z(const ZVec& v);

QMat q_mul(const QMat& a, const QMat& b);
QVec q_mul_vec(const QMat& a, const QVec& v);
bool q_is_zero(const QMat& a);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row. Zero rows are dropped.
std::vector<std::size_t> rref(QMat& m);

std::size_t q_rank(QMat m);

// Canonical reduced column echelon form: columns are the basis vectors.
// Zero columns are dropped, pivots normalized to 1, pivot rows cleared.
void column_echelon(QMat& m);

// Inverse via Gaussian elimination; throws if singular.
QMat q_inverse(const QMat& m);

// Solve B * X = C where the columns of C lie in the column space of B and B
// has full column rank. Returns std::nullopt if some column of C is not in
// the span.
std::optional<QMat> solve_in_column_space(const QMat& b, const QMat& c);

// Integer lattice split: given integer linear forms (rows of `forms`, each of
// length `rank`), produce a basis of the saturated lattice
// {v in Z^rank : forms * v = 0} together with complementary vectors so that
// kernel_basis ++ complement_basis is a basis of Z^rank.
struct LatticeSplit {
  ZMat kernel_basis;
  ZMat complement_basis;
};
LatticeSplit integer_kernel_split(const ZMat& forms, std::size_t rank);

}  // namespace cohint

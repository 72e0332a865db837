#pragma once

/*
  The cocharacter lattice X_*(T) = Z^r, its dual weight lattice, the pairing
  between them, and rational subspaces of X_*(T) ⊗ Q in canonical reduced
  row-echelon form. Subspaces double as dictionary keys: two subspaces are
  equal iff their echelon bases are identical.
*/

#include <stdexcept>
#include <string>

#include "cohint/linalg.hpp"
#include "cohint/rational.hpp"

namespace cohint {

struct Cocharacter {
  ZVec coords;

  std::size_t rank() const { return coords.size(); }
  bool operator==(const Cocharacter&) const = default;
  bool operator<(const Cocharacter& o) const { return coords < o.coords; }
};

// A weight is an integer linear form on cocharacters.
struct Weight {
  ZVec coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const {
    for (Z c : coords)
      if (c != 0) return false;
    return true;
  }
  Weight negated() const {
    Weight w = *this;
    for (Z& c : w.coords) c = -c;
    return w;
  }
  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

Z pair(const Cocharacter& lambda, const Weight& beta);

// Sign-normalize a form: first nonzero coordinate positive. This is the
// leading coefficient in the lex term order, so normalized forms multiply to
// normalized products.
Weight normalize_sign(const Weight& w);

class RationalSubspace {
 public:
  RationalSubspace() = default;

  static RationalSubspace full(std::size_t rank);
  static RationalSubspace zero(std::size_t rank);
  static RationalSubspace span(const QMat& vectors, std::size_t rank);
  static RationalSubspace span_z(const ZMat& vectors, std::size_t rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const QMat& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool operator==(const RationalSubspace&) const = default;
  bool operator<(const RationalSubspace& o) const;

  // Basis rows scaled to primitive integer vectors (used for the generic
  // point search).
  ZMat primitive_basis() const;

  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  QMat basis_;  // reduced row-echelon rows; canonical
};

// Canonical subspace {v : <v,beta> = 0 for all beta in forms} of Q^rank.
RationalSubspace common_kernel(const std::vector<Weight>& forms, std::size_t rank);

// Deterministic integer point of `subspace` avoiding the kernels of the
// given forms. Search: heights h = 1, 2, ...; coefficient tuples in
// {0..h}^dim with max coordinate h, in descending lexicographic order;
// candidate = sum of coefficients times the primitive echelon basis rows.
// Throws if some form vanishes identically on the subspace.
Cocharacter generic_point(const RationalSubspace& subspace, const std::vector<Weight>& avoid);

}  // namespace cohint

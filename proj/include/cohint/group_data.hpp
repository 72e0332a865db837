#pragma once

/*
  Reductive groups as presented data: a rank, a symmetric root multiset, a
  finite Weyl matrix group and a dimension. Symmetric representations are
  weight multisets stable under negation. No root-system classification is
  attempted; users may feed raw data.

  Dimension bookkeeping: dim G = rank + #roots for the honest builders, but
  descriptors may override it (sl(n) keeps the rank-n lattice with dim n²−1).
  Levi dimensions are therefore computed as dim G minus the number of roots
  not vanishing on the cocharacter, which is what makes d + 2r = dim V − dim G
  hold on every symmetric input regardless of the override.
*/

#include <string>

#include "cohint/weyl.hpp"

namespace cohint {

struct GroupDescriptor {
  std::size_t rank = 0;
  std::vector<Weight> roots;  // sorted multiset, repetition = multiplicity
  FiniteGroup weyl;
  Z dim = 0;
  std::string label;

  void sort_roots();
  bool roots_symmetric() const;
};

struct SymmetricRep {
  std::vector<Weight> weights;  // sorted multiset, zero weight allowed

  Z dim() const { return static_cast<Z>(weights.size()); }
  void sort_weights();
};

struct PairVG {
  SymmetricRep rep;
  GroupDescriptor group;

  std::size_t rank() const { return group.rank; }
  Z d() const { return rep.dim() - group.dim; }  // dim of the stack V/G
};

bool is_symmetric(const SymmetricRep& rep);

GroupDescriptor build_torus(std::size_t r);
GroupDescriptor build_gl(std::size_t n);
GroupDescriptor build_sl(std::size_t n);
GroupDescriptor build_product(const std::vector<GroupDescriptor>& factors);

// Levi subgroup G^λ: roots vanishing on λ, Weyl = pointwise stabilizer of
// span(λ), dim = dim G − #{roots not vanishing on λ}.
GroupDescriptor levi(const GroupDescriptor& g, const Cocharacter& lambda);

struct FixedAttracting {
  SymmetricRep fixed;  // V^λ
  Z d = 0;             // dim V^λ − dim G^λ
  Z r = 0;             // #W^{λ>0}(V) − #W^{λ>0}(g)
};
FixedAttracting fixed_and_attracting(const SymmetricRep& v, const GroupDescriptor& g,
                                     const Cocharacter& lambda);

// Central quotient (V̄, Ḡ) = (V, G/G₀) with G₀ the central subgroup acting
// trivially: g₀ = common kernel of all weights and roots. The quotient
// lattice is presented on a complement completing the saturated kernel
// lattice to a basis of Z^r; weights and roots descend, Weyl elements act
// through the projection along g₀ (integral by unimodularity).
struct CentralQuotient {
  PairVG pair;          // the quotient pair, on a rank (r − g0_dim) lattice
  Z g0_dim = 0;
  ZMat complement;      // complement basis vectors in the original Z^r
  QMat projection;      // (r − g0_dim) × r: coordinates along the complement

  // Push an element of the original lattice's group down to the quotient
  // lattice. Requires w to preserve g₀ (throws otherwise).
  GroupElement descend(const GroupElement& w) const;
};
CentralQuotient central_quotient(const PairVG& pair);

}  // namespace cohint

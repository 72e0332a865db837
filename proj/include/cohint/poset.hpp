#pragma once

/*
  The partition poset of a symmetric pair (V, G): equivalence classes of
  cocharacters under "same (V^λ, G^λ)", enumerated through the flat lattice
  of the hyperplane arrangement cut out by the weights of V and the roots of
  G. Connected-component indices are dropped: fixed loci of tori on a linear
  representation are connected.

  A class is keyed by the sorted multisets of weights and roots vanishing on
  its cocharacters; the canonical representative subspace (the Lie algebra of
  the preferred torus) is the common kernel of exactly those forms, and every
  flat of the arrangement is such a kernel, so classes and flats biject.
*/

#include "cohint/group_data.hpp"

namespace cohint {

struct ClassKey {
  std::vector<Weight> v_fixed;  // sorted multiset of V-weights vanishing on λ
  std::vector<Weight> roots;    // sorted multiset of roots vanishing on λ

  bool operator==(const ClassKey&) const = default;
  bool operator<(const ClassKey& o) const;
};

ClassKey act(const GroupElement& w, const ClassKey& key);

struct PartitionClass {
  ClassKey key;
  Cocharacter rep;         // stored representative cocharacter
  RationalSubspace torus;  // preferred torus Lie algebra = g_lambda_space
  Z g_dim = 0;             // dim of the preferred torus
  Z d = 0;                 // dim V^λ − dim G^λ
  Z r = 0;                 // attracting rank shift

  bool is_trivial(const PairVG& pair) const;
};

// Complete deduplicated class list, in flat-closure order. Rejects
// non-symmetric representations.
std::vector<PartitionClass> enumerate_classes(const PairVG& pair);

// Multiset inclusion of both keys: the order relation on classes.
bool leq(const PartitionClass& a, const PartitionClass& b);

struct ClassWeylData {
  FiniteGroup stabilizer;          // W_λ: setwise stabilizer of the class
  FiniteGroup pointwise;           // W^λ: pointwise stabilizer of the torus
  std::vector<GroupElement> lifts; // coset representatives for W̄_λ = W_λ/W^λ
};

struct PosetData {
  std::vector<PartitionClass> classes;
  std::vector<std::vector<std::size_t>> orbits;  // partition of class indices
  std::vector<std::size_t> orbit_of;             // class index -> orbit index
  std::vector<ClassWeylData> weyl;               // per class
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covers: (lower, upper)
  std::size_t trivial_index = 0;
};

PosetData weyl_structure(const std::vector<PartitionClass>& classes, const PairVG& pair);

// The pair (V^λ, G^λ) of a class, on the ambient lattice. Its Weyl group is
// the pointwise stabilizer of the class's preferred torus.
PairVG sub_pair(const PartitionClass& c, const PairVG& pair);

// Classes of (V^λ, G^λ); every result satisfies leq(·, c).
std::vector<PartitionClass> subclasses_of(const PartitionClass& c, const PairVG& pair);

}  // namespace cohint

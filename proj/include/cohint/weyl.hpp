#pragma once

/*
  Finite matrix groups acting on the cocharacter lattice: closure generation,
  pointwise/setwise stabilizers and coset decompositions. Everything is by
  exhaustive enumeration; the element list order is the breadth-first closure
  order, which makes coset representatives deterministic.
*/

#include <functional>
#include <map>

#include "cohint/lattice.hpp"

namespace cohint {

struct GroupElement {
  ZMat matrix;   // action on cocharacters (columns)
  ZMat inverse;  // cached; weights transform through it

  std::size_t rank() const { return matrix.size(); }
  bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
  bool operator<(const GroupElement& o) const { return matrix < o.matrix; }
};

GroupElement identity_element(std::size_t rank);
GroupElement make_element(const ZMat& m);  // computes and checks the integer inverse
GroupElement product(const GroupElement& a, const GroupElement& b);

Cocharacter act(const GroupElement& w, const Cocharacter& v);
Weight act(const GroupElement& w, const Weight& beta);  // beta ∘ w^{-1}
RationalSubspace act(const GroupElement& w, const RationalSubspace& s);

class FiniteGroup {
 public:
  FiniteGroup() = default;

  static constexpr std::size_t kDefaultCap = 10080;

  // Closure of the generators under products; throws "group too large" past
  // `cap` elements and rejects non-invertible generators.
  static FiniteGroup generate(const std::vector<GroupElement>& generators, std::size_t rank,
                              std::size_t cap = kDefaultCap);

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t rank() const { return rank_; }

  bool contains(const GroupElement& g) const { return index_.count(g.matrix) != 0; }
  std::size_t index_of(const GroupElement& g) const;
  bool is_subgroup_of(const FiniteGroup& bigger) const;

 private:
  std::size_t rank_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::map<ZMat, std::size_t> index_;
};

FiniteGroup trivial_group(std::size_t rank);

// Subgroup of elements fixing every vector of S.
FiniteGroup pointwise_stabilizer(const FiniteGroup& w, const RationalSubspace& s);

// Subgroup fixing a canonical key under the supplied action.
template <typename Key>
FiniteGroup setwise_stabilizer(const FiniteGroup& w,
                               const Key& key,
                               const std::function<Key(const GroupElement&, const Key&)>& action) {
  std::vector<GroupElement> kept;
  for (const auto& g : w.elements())
    if (action(g, key) == key) kept.push_back(g);
  return FiniteGroup::generate(kept, w.rank(), w.order() + 1);
}

// One element per left coset wH, in stored element order. Checks that H is a
// subgroup of W.
std::vector<GroupElement> coset_representatives(const FiniteGroup& w, const FiniteGroup& h);

bool is_normal_in(const FiniteGroup& h, const FiniteGroup& w);

}  // namespace cohint

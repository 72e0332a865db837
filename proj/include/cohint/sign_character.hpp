#pragma once

/*
  The rational function k_λ attached to a partition class — the ratio of the
  product of V-weights positive on λ by the product of roots positive on λ —
  kept as a signed multiset of linear forms, and the ±1 character ε on the
  class stabilizer recording how W_λ rescales k_λ. k is never expanded; the
  multiset shadow is all the downstream isotypic projectors need.
*/

#include "cohint/poset.hpp"

namespace cohint {

struct SignedFormMultiset {
  std::vector<Weight> numerator;    // V-weights with <λ,β> > 0, sorted
  std::vector<Weight> denominator;  // roots with <λ,α> > 0, sorted
};

SignedFormMultiset k_multiset(const PartitionClass& c, const PairVG& pair);

// ε(w) = (−1)^{numerator flips} · (−1)^{denominator flips} when w·k = ±k.
// Throws "k not quasi-invariant" if the multisets fail to match up to signs
// (w outside W_λ, or inconsistent input data).
int epsilon(const PartitionClass& c, const GroupElement& w, const PairVG& pair);

}  // namespace cohint

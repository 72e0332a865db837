#include "cohint/sign_character.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cohint {

SignedFormMultiset k_multiset(const PartitionClass& c, const PairVG& p) {
  if (!is_symmetric(p.rep)) throw std::invalid_argument("k_multiset: representation is not symmetric");
  SignedFormMultiset k;
  for (const auto& w : p.rep.weights)
    if (pair(c.rep, w) > 0) k.numerator.push_back(w);
  for (const auto& a : p.group.roots)
    if (pair(c.rep, a) > 0) k.denominator.push_back(a);
  std::sort(k.numerator.begin(), k.numerator.end());
  std::sort(k.denominator.begin(), k.denominator.end());
  return k;
}

namespace {

// Match w-images of `forms` against the original multiset allowing per-form
// sign flips; returns the flip parity. Within one side of k all forms are
// λ-positive, so for each image at most one of ±(image) is present and the
// matching is forced.
int match_flips(const std::vector<Weight>& forms, const GroupElement& w) {
  std::map<ZVec, Z> remaining;
  for (const auto& f : forms) ++remaining[f.coords];
  int flips = 0;
  for (const auto& f : forms) {
    Weight moved = act(w, f);
    auto it = remaining.find(moved.coords);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      continue;
    }
    it = remaining.find(moved.negated().coords);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++flips;
      continue;
    }
    throw std::runtime_error("epsilon: k not quasi-invariant under the given element");
  }
  return flips;
}

}  // namespace

int epsilon(const PartitionClass& c, const GroupElement& w, const PairVG& p) {
  SignedFormMultiset k = k_multiset(c, p);
  int flips = match_flips(k.numerator, w) + match_flips(k.denominator, w);
  return flips % 2 == 0 ? 1 : -1;
}

}  // namespace cohint

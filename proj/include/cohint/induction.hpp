#pragma once

/*
  Explicit parabolic induction on invariant polynomial rings:

      Ind_λ(f) = Σ_{w ∈ W/W^λ} w · (f · e_λ),

  with e_λ the ratio of the product of V-weights positive on λ by the product
  of roots positive on λ. Each ± pair of forms enters through its
  sign-normalized representative (global sign differences drop out of every
  quantity consumed downstream), which makes the operator independent of the
  class representative and strictly associative along chains. The coset sum
  clears all denominators on symmetric input; failure to clear is reported as
  an error, doubling as a symmetry check.

  Cohomological degree is 2× polynomial degree throughout; induction raises
  polynomial degree by r_λ.
*/

#include "cohint/molien.hpp"
#include "cohint/poset.hpp"

namespace cohint {

struct EngineOptions {
  // Negative control: drop one factor of e_λ (first numerator form).
  bool corrupt_kernel = false;
  // Reverse the monomial enumeration order (basis-order independence check).
  bool reversed_monomial_order = false;
};

struct InductionOperator {
  std::vector<Weight> numerator;    // normalized kernel forms with multiplicity
  std::vector<Weight> denominator;  // normalized root forms with multiplicity
  std::vector<GroupElement> cosets; // representatives of W/W^λ
  Z r = 0;                          // polynomial degree shift
};

InductionOperator make_induction(const PartitionClass& c, const PairVG& pair,
                                 const EngineOptions& opt = {});

// Apply the operator; throws "denominator does not clear" on failure.
Poly induce(const InductionOperator& op, const Poly& f);

// Matrix of Ind_λ from invariant_basis(W^λ, d) to invariant_basis(W, d + r_λ).
QMat induction_matrix(const PartitionClass& c, const PairVG& pair, Z poly_degree,
                      const EngineOptions& opt = {});

// Matrix of a group element on the degree-d monomial slice.
QMat slice_action(const GroupElement& w, const std::vector<Exponents>& monomials);

// Trace of `action` restricted to the column space of `basis`; throws if the
// action does not preserve the subspace.
Q trace_on_subspace(const QMat& basis, const QMat& action);

// Union of induction images of the given source classes inside the ambient
// monomial slices, per polynomial degree 0..max_degree, as canonical echelon
// bases.
std::map<Z, QMat> induction_image(const std::vector<PartitionClass>& sources, const PairVG& pair,
                                  Z max_degree, const EngineOptions& opt = {});

// Single degree slice of the image, from prebuilt operators.
QMat induction_image_degree(const std::vector<InductionOperator>& ops,
                            const std::vector<FiniteGroup>& src_groups, const PairVG& pair,
                            Z degree, const EngineOptions& opt = {});

// Graded character of a finite group action (through explicit lifts) on
// shifted-degree-indexed spaces. `entries[n]` holds one trace per lift, so
// entries[n][0] is the dimension whenever lifts[0] = id.
struct GradedCharacter {
  Z group_order = 1;
  std::map<Z, QVec> entries;
  Z cutoff = 0;

  Z dim_at(Z degree) const;
  std::map<Z, Z> dims() const;
  bool operator==(const GradedCharacter&) const = default;
};

struct GradedImage {
  std::map<Z, QMat> by_degree;  // echelon bases in monomial coordinates, keyed by poly degree
  GradedCharacter character;    // traces of the lifts, keyed by shifted degree 2k − d
};

// Stacked induction image of the full W-orbit of `c` inside the invariant
// ring of the pair, with the graded character of the given lifts on it.
// Shifted degrees run up to `cutoff`. The lifts must normalize the image
// (guaranteed for coset representatives of a stabilizer when the sources are
// a W-stable orbit); a lift that fails to preserve it raises an error.
GradedImage image_graded_character(const PartitionClass& c, const PairVG& pair, Z cutoff,
                                   const std::vector<GroupElement>& lifts,
                                   const EngineOptions& opt = {});

}  // namespace cohint

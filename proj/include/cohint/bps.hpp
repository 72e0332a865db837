#pragma once

/*
  The BPS spaces and the integrality identity.

  For a symmetric pair (V, G), pass to the central quotient (V̄, Ḡ), sum the
  induction images of the full invariant rings of all proper classes, and
  take the graded character of the complement inside the Ḡ-invariant ring:
  that is the BPS character of the trivial class. The BPS character of any
  class is this construction run on its sub-pair (V^λ, G^λ); the class
  stabilizer acts through coset lifts, which descend to the quotient lattice.

  Characters of complements are computed as differences of characters
  (ambient minus image), never through explicit complement bases: in each
  finite degree the group algebra is semisimple, so the character does not
  depend on the choice of complement.

  Degree bookkeeping: a polynomial degree k in the quotient ring sits in
  shifted degree 2k − d_λ for the sub-pair (d_λ = dim V^λ − dim G^λ). With
  d = d_λ + 2r_λ this makes the isotypic contribution of a class land at
  shifted degree a + 2b, where a is the BPS degree and b the polynomial
  degree on the Lie algebra of the preferred torus.
*/

#include <memory>
#include <mutex>
#include <string>

#include "cohint/induction.hpp"
#include "cohint/sign_character.hpp"

namespace cohint {

// Degree data of a centrally-quotiented pair: ambient invariants and the
// total induction image per polynomial degree. This depends only on the
// quotient pair's presentation, so the engine memoizes it by the canonical
// quotient key (distinct classes with isomorphic sub-pairs share it).
class QuotientCohomology {
 public:
  QuotientCohomology(PairVG qpair, const EngineOptions& opt);

  struct Degree {
    std::vector<Exponents> monomials;
    QMat invariants;  // canonical basis of the quotient-Weyl invariants
    QMat image;       // canonical basis of the total induction image
  };
  // Lazily extends the degree table; insertion is exclusive, values are
  // idempotent, and returned references stay valid (node-based map).
  const Degree& degree(Z k);
  void ensure(Z max_poly_degree);
  const PairVG& qpair() const { return qpair_; }

 private:
  EngineOptions opt_;
  PairVG qpair_;
  std::vector<PartitionClass> proper_;
  std::vector<InductionOperator> ops_;
  std::vector<FiniteGroup> src_groups_;
  std::mutex mutex_;
  std::map<Z, Degree> degrees_;
};

// Cohomology of a pair through its central quotient. The lattice embedding
// (complement, projection) is per pair: two sub-pairs may share quotient
// degree data while their g0 subspaces differ, so traces of ambient lifts
// must descend through the caller's own quotient map.
class PairCohomology {
 public:
  PairCohomology(CentralQuotient cq, std::shared_ptr<QuotientCohomology> shared);

  const CentralQuotient& quotient() const { return cq_; }

  // Trace of an ambient-lattice element (which must preserve the pair's g0)
  // on the degree-k complement of the induction image.
  Q complement_trace(const GroupElement& ambient_lift, Z poly_degree);
  Z complement_dim(Z poly_degree);

 private:
  CentralQuotient cq_;
  std::shared_ptr<QuotientCohomology> shared_;
};

struct BpsRecord {
  ClassKey class_key;
  GradedCharacter p_char;  // shifted degrees of the pair; lifts[0] = id
  Z g_dim = 0;
  bool stable = false;
};

struct OrbitContribution {
  std::size_t class_index = 0;  // representative class
  std::size_t orbit_size = 1;
  Z weyl_bar_order = 1;
  std::vector<int> eps;    // per lift
  std::map<Z, Z> p_dims;   // BPS dims of the representative, shifted degrees
  std::map<Z, Z> dims;     // isotypic contribution per shifted degree
};

struct IntegralityReport {
  std::map<Z, Z> target;           // shifted Poincaré series of H*(pt/G)
  std::vector<OrbitContribution> contributions;
  std::map<Z, Z> residual;         // target − sum of contributions
  Z cutoff = 0;
  bool pass = false;
};

struct Rank1Report {
  std::map<Z, Z> expected;  // closed form from the weight multiset
  std::map<Z, Z> computed;  // engine BPS dims of the trivial class
  bool dims_match = false;
  bool integrality_pass = false;
  bool degenerate = false;  // no nonzero weight: closed form does not apply
};

class Engine {
 public:
  explicit Engine(EngineOptions opt = {}) : opt_(opt) {}
  const EngineOptions& options() const { return opt_; }

  // Memoized per canonical presentation of the central quotient.
  std::shared_ptr<PairCohomology> pair_cohomology(const PairVG& pair);

  BpsRecord bps_character(const PairVG& pair, Z cutoff);
  IntegralityReport verify_integrality(const PairVG& pair, Z cutoff);
  Rank1Report rank1_conjecture_check(const SymmetricRep& v, Z cutoff);

 private:
  EngineOptions opt_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<QuotientCohomology>> memo_;
};

// ε-isotypic graded dimensions of p ⊗ Sym(g_space*): at shifted degree n,
// average ε(w)·Σ_{a+2b=n} tr_p(w,a)·tr_{Sym^b}(w|g_space) over the lifts.
std::map<Z, Z> isotypic_dims(const GradedCharacter& p, const RationalSubspace& g_space,
                             const std::vector<GroupElement>& lifts, const std::vector<int>& eps,
                             Z cutoff);

std::string canonical_pair_key(const PairVG& pair);

}  // namespace cohint

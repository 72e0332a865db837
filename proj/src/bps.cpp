#include "cohint/bps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cohint {

std::string canonical_pair_key(const PairVG& p) {
  std::ostringstream os;
  os << "r" << p.rank() << ";d" << p.group.dim << ";W";
  std::vector<ZMat> elems;
  for (const auto& e : p.group.weyl.elements()) elems.push_back(e.matrix);
  std::sort(elems.begin(), elems.end());
  for (const auto& m : elems) {
    for (const auto& row : m)
      for (Z x : row) os << x << ",";
    os << "|";
  }
  os << ";V";
  for (const auto& w : p.rep.weights) {
    for (Z x : w.coords) os << x << ",";
    os << "|";
  }
  os << ";R";
  for (const auto& r : p.group.roots) {
    for (Z x : r.coords) os << x << ",";
    os << "|";
  }
  return os.str();
}

QuotientCohomology::QuotientCohomology(PairVG qpair, const EngineOptions& opt)
    : opt_(opt), qpair_(std::move(qpair)) {
  auto classes = enumerate_classes(qpair_);
  for (auto& c : classes)
    if (!c.is_trivial(qpair_)) proper_.push_back(std::move(c));
  for (const auto& c : proper_) {
    ops_.push_back(make_induction(c, qpair_, opt_));
    src_groups_.push_back(pointwise_stabilizer(qpair_.group.weyl, c.torus));
  }
}

const QuotientCohomology::Degree& QuotientCohomology::degree(Z k) {
  ensure(k);
  std::lock_guard<std::mutex> lock(mutex_);
  return degrees_.at(k);
}

void QuotientCohomology::ensure(Z max_poly_degree) {
  std::size_t nvars = qpair_.rank();
  for (Z k = 0; k <= max_poly_degree; ++k) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (degrees_.count(k)) continue;
    }
    Degree d;
    d.monomials = monomials_of_degree(nvars, k, opt_.reversed_monomial_order);
    d.invariants = invariant_basis(qpair_.group.weyl, k, d.monomials);
    d.image = induction_image_degree(ops_, src_groups_, qpair_, k, opt_);
    std::lock_guard<std::mutex> lock(mutex_);
    degrees_.emplace(k, std::move(d));
  }
}

PairCohomology::PairCohomology(CentralQuotient cq, std::shared_ptr<QuotientCohomology> shared)
    : cq_(std::move(cq)), shared_(std::move(shared)) {}

Q PairCohomology::complement_trace(const GroupElement& ambient_lift, Z poly_degree) {
  const QuotientCohomology::Degree& d = shared_->degree(poly_degree);
  GroupElement descended = cq_.descend(ambient_lift);
  QMat action = slice_action(descended, d.monomials);
  return trace_on_subspace(d.invariants, action) - trace_on_subspace(d.image, action);
}

Z PairCohomology::complement_dim(Z poly_degree) {
  const QuotientCohomology::Degree& d = shared_->degree(poly_degree);
  Z dim = static_cast<Z>(d.invariants.empty() ? 0 : d.invariants[0].size()) -
          static_cast<Z>(d.image.empty() ? 0 : d.image[0].size());
  if (dim < 0) throw std::logic_error("complement ill-defined: negative dimension");
  return dim;
}

std::shared_ptr<PairCohomology> Engine::pair_cohomology(const PairVG& pair) {
  CentralQuotient cq = central_quotient(pair);
  std::string key = canonical_pair_key(cq.pair);
  std::shared_ptr<QuotientCohomology> shared;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      shared = std::make_shared<QuotientCohomology>(cq.pair, opt_);
      memo_[key] = shared;
    } else {
      shared = it->second;
    }
  }
  return std::make_shared<PairCohomology>(std::move(cq), std::move(shared));
}

BpsRecord Engine::bps_character(const PairVG& pair, Z cutoff) {
  if (!is_symmetric(pair.rep))
    throw std::invalid_argument("bps_character: representation is not symmetric");
  auto pc = pair_cohomology(pair);
  Z d = pair.d();
  BpsRecord rec;
  for (const auto& w : pair.rep.weights) rec.class_key.v_fixed.push_back(w);
  for (const auto& r : pair.group.roots) rec.class_key.roots.push_back(r);
  rec.g_dim = pc->quotient().g0_dim;
  rec.p_char.group_order = 1;
  rec.p_char.cutoff = cutoff;
  Z bound = pair.rep.dim() + pair.group.dim;  // boundedness window of the BPS space
  Z max_k = (cutoff + d) / 2;
  for (Z k = 0; k <= max_k; ++k) {
    Z n = 2 * k - d;
    if (n > cutoff) continue;
    Z dim = pc->complement_dim(k);
    if (dim != 0 && (n < -bound || n > bound))
      throw std::logic_error("bps_character: support outside the boundedness window");
    rec.p_char.entries[n] = QVec{q_of(dim)};
    if (dim != 0) rec.stable = true;
  }
  return rec;
}

std::map<Z, Z> isotypic_dims(const GradedCharacter& p, const RationalSubspace& g_space,
                             const std::vector<GroupElement>& lifts, const std::vector<int>& eps,
                             Z cutoff) {
  if (lifts.size() != eps.size()) throw std::invalid_argument("isotypic_dims: lift/eps mismatch");
  std::vector<QMat> restricted;
  restricted.reserve(lifts.size());
  for (const auto& l : lifts) restricted.push_back(restrict_to_subspace(l, g_space));

  std::map<Z, Z> out;
  if (p.entries.empty()) return out;
  Z a_min = p.entries.begin()->first;
  for (Z n = a_min; n <= cutoff; ++n) {
    Q total(0);
    for (std::size_t l = 0; l < lifts.size(); ++l) {
      Q inner(0);
      for (const auto& [a, traces] : p.entries) {
        if (a > n || (n - a) % 2 != 0) continue;
        Z b = (n - a) / 2;
        if (traces[l] == 0) continue;
        inner += traces[l] * molien_trace(restricted[l], b);
      }
      total += Q(eps[l]) * inner;
    }
    total /= Q(static_cast<long>(lifts.size()));
    if (total == 0) continue;
    if (total.get_den() != 1 || total < 0)
      throw std::logic_error("isotypic_dims: non-integral or negative dimension");
    out[n] = static_cast<Z>(total.get_num().get_si());
  }
  return out;
}

IntegralityReport Engine::verify_integrality(const PairVG& pair, Z cutoff) {
  if (!is_symmetric(pair.rep))
    throw std::invalid_argument("verify_integrality: representation is not symmetric");
  IntegralityReport report;
  report.cutoff = cutoff;
  Z d = pair.d();

  auto classes = enumerate_classes(pair);
  PosetData poset = weyl_structure(classes, pair);

  // Target: shifted Poincaré series of H*(pt/G), Molien-averaged over W.
  for (Z k = 0;; ++k) {
    Z n = 2 * k - d;
    if (n > cutoff) break;
    Q dim = molien_invariant_dimension(pair.group.weyl, k);
    if (dim.get_den() != 1) throw std::logic_error("verify_integrality: non-integral target");
    Z v = static_cast<Z>(dim.get_num().get_si());
    if (v != 0) report.target[n] = v;
  }

  Z floor = -d;
  for (const auto& orbit : poset.orbits) {
    std::size_t rep_index = *std::min_element(orbit.begin(), orbit.end());
    const PartitionClass& c = classes[rep_index];
    const ClassWeylData& wd = poset.weyl[rep_index];

    OrbitContribution contrib;
    contrib.class_index = rep_index;
    contrib.orbit_size = orbit.size();
    contrib.weyl_bar_order = static_cast<Z>(wd.lifts.size());
    for (const auto& lift : wd.lifts) contrib.eps.push_back(epsilon(c, lift, pair));

    PairVG sub = sub_pair(c, pair);
    auto pc = pair_cohomology(sub);
    Z max_k = (cutoff + c.d) / 2;
    GradedCharacter p;
    p.group_order = contrib.weyl_bar_order;
    p.cutoff = cutoff;
    for (Z k = 0; k <= max_k; ++k) {
      Z n = 2 * k - c.d;
      if (n > cutoff) continue;
      QVec traces;
      traces.reserve(wd.lifts.size());
      for (const auto& lift : wd.lifts) traces.push_back(pc->complement_trace(lift, k));
      p.entries[n] = std::move(traces);
    }
    contrib.p_dims = p.dims();
    contrib.dims = isotypic_dims(p, c.torus, wd.lifts, contrib.eps, cutoff);
    if (!p.entries.empty()) floor = std::min(floor, p.entries.begin()->first);
    report.contributions.push_back(std::move(contrib));
  }

  // Residual on the parity-aligned degree window.
  report.pass = true;
  for (Z n = floor; n <= cutoff; ++n) {
    if ((n - d) % 2 != 0) continue;
    Z t = report.target.count(n) ? report.target.at(n) : 0;
    Z s = 0;
    for (const auto& contrib : report.contributions)
      if (contrib.dims.count(n)) s += contrib.dims.at(n);
    if (t != s) {
      report.residual[n] = t - s;
      report.pass = false;
    }
  }
  return report;
}

Rank1Report Engine::rank1_conjecture_check(const SymmetricRep& v, Z cutoff) {
  if (!v.weights.empty() && v.weights[0].rank() != 1)
    throw std::invalid_argument("rank1_conjecture_check: rank-1 torus input required");
  if (!is_symmetric(v))
    throw std::invalid_argument("rank1_conjecture_check: representation is not symmetric");
  Rank1Report report;
  PairVG pair{v, build_torus(1)};

  Z dim_v = v.dim();
  Z dim_fixed = 0;
  for (const auto& w : v.weights)
    if (w.is_zero()) ++dim_fixed;
  if (dim_v == dim_fixed) {
    report.degenerate = true;  // trivial action: weighted projective space is empty
  } else {
    for (Z j = 0; j < (dim_v - dim_fixed) / 2; ++j) report.expected[-(dim_v - 1 - 2 * j)] = 1;
  }

  report.computed = bps_character(pair, cutoff).p_char.dims();
  report.dims_match = !report.degenerate && report.expected == report.computed;
  report.integrality_pass = verify_integrality(pair, cutoff).pass;
  return report;
}

}  // namespace cohint

#include "cohint/induction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohint {

InductionOperator make_induction(const PartitionClass& c, const PairVG& p,
                                 const EngineOptions& opt) {
  if (!is_symmetric(p.rep)) throw std::invalid_argument("make_induction: representation is not symmetric");
  InductionOperator op;
  for (const auto& w : p.rep.weights)
    if (pair(c.rep, w) > 0) op.numerator.push_back(normalize_sign(w));
  for (const auto& a : p.group.roots)
    if (pair(c.rep, a) > 0) op.denominator.push_back(normalize_sign(a));
  std::sort(op.numerator.begin(), op.numerator.end());
  std::sort(op.denominator.begin(), op.denominator.end());
  if (opt.corrupt_kernel && !op.numerator.empty()) op.numerator.erase(op.numerator.begin());
  op.r = static_cast<Z>(op.numerator.size()) - static_cast<Z>(op.denominator.size());

  FiniteGroup pointwise = pointwise_stabilizer(p.group.weyl, c.torus);
  op.cosets = coset_representatives(p.group.weyl, pointwise);
  return op;
}

namespace {

// One coset term: sign * polynomial / multiset of normalized forms.
struct Fraction {
  Poly num;
  std::map<ZVec, int> den;
};

}  // namespace

Poly induce(const InductionOperator& op, const Poly& f) {
  std::size_t nvars = f.nvars;
  Poly base = f;
  for (const auto& w : op.numerator) base = mul(base, Poly::linear_form(w));

  std::vector<Fraction> terms;
  std::map<ZVec, int> common;
  for (const auto& g : op.cosets) {
    Fraction t;
    t.num = apply(g, base);
    for (const auto& d : op.denominator) {
      Weight moved = act(g, d);
      Weight normal = normalize_sign(moved);
      if (!(normal == moved)) t.num = t.num.scaled(Q(-1));
      ++t.den[normal.coords];
    }
    for (const auto& [form, mult] : t.den) {
      auto it = common.find(form);
      if (it == common.end())
        common[form] = mult;
      else
        it->second = std::max(it->second, mult);
    }
    terms.push_back(std::move(t));
  }

  Poly total = Poly::zero(nvars);
  for (auto& t : terms) {
    Poly scaled = std::move(t.num);
    for (const auto& [form, mult] : common) {
      auto it = t.den.find(form);
      int missing = mult - (it == t.den.end() ? 0 : it->second);
      Poly ell = Poly::linear_form(Weight{form});
      for (int k = 0; k < missing; ++k) scaled = mul(scaled, ell);
    }
    total += scaled;
  }
  for (const auto& [form, mult] : common) {
    for (int k = 0; k < mult; ++k) {
      auto q = divide_by_linear(total, Weight{form});
      if (!q) throw std::runtime_error("induce: denominator does not clear");
      total = std::move(*q);
    }
  }
  if (!total.is_zero() && f.degree() >= 0 && total.degree() != f.degree() + op.r)
    throw std::logic_error("induce: unexpected output degree");
  return total;
}

QMat induction_matrix(const PartitionClass& c, const PairVG& p, Z poly_degree,
                      const EngineOptions& opt) {
  InductionOperator op = make_induction(c, p, opt);
  FiniteGroup source_group = pointwise_stabilizer(p.group.weyl, c.torus);
  auto src_mons = monomials_of_degree(p.rank(), poly_degree, opt.reversed_monomial_order);
  auto tgt_mons = monomials_of_degree(p.rank(), poly_degree + op.r, opt.reversed_monomial_order);
  QMat src_basis = invariant_basis(source_group, poly_degree, src_mons);
  QMat tgt_basis = invariant_basis(p.group.weyl, poly_degree + op.r, tgt_mons);

  std::size_t k = src_basis.empty() ? 0 : src_basis[0].size();
  std::size_t rows = tgt_mons.size();
  QMat images(rows, QVec(k, Q(0)));
  for (std::size_t j = 0; j < k; ++j) {
    QVec col(src_basis.size());
    for (std::size_t i = 0; i < src_basis.size(); ++i) col[i] = src_basis[i][j];
    Poly f = from_coefficients(p.rank(), src_mons, col);
    Poly out = induce(op, f);
    QVec oc = coefficient_vector(out, tgt_mons);
    for (std::size_t i = 0; i < rows; ++i) images[i][j] = oc[i];
  }
  auto m = solve_in_column_space(tgt_basis, images);
  if (!m) throw std::logic_error("induction_matrix: image not W-invariant");
  if (m->empty()) {
    std::size_t tk = tgt_basis.empty() ? 0 : tgt_basis[0].size();
    return QMat(tk, QVec(k, Q(0)));
  }
  return *m;
}

QMat slice_action(const GroupElement& w, const std::vector<Exponents>& monomials) {
  std::size_t n = monomials.size();
  QMat a(n, QVec(n, Q(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Poly img = apply(w, Poly::monomial(monomials[j], Q(1)));
    QVec col = coefficient_vector(img, monomials);
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col[i];
  }
  return a;
}

Q trace_on_subspace(const QMat& basis, const QMat& action) {
  if (basis.empty() || basis[0].empty()) return Q(0);
  QMat moved = q_mul(action, basis);
  auto m = solve_in_column_space(basis, moved);
  if (!m) throw std::runtime_error("trace_on_subspace: action does not preserve the subspace");
  Q tr(0);
  for (std::size_t i = 0; i < m->size(); ++i) tr += (*m)[i][i];
  return tr;
}

QMat induction_image_degree(const std::vector<InductionOperator>& ops,
                            const std::vector<FiniteGroup>& src_groups, const PairVG& p, Z deg,
                            const EngineOptions& opt) {
  auto tgt_mons = monomials_of_degree(p.rank(), deg, opt.reversed_monomial_order);
  QMat columns(tgt_mons.size(), QVec(0));
  for (std::size_t s = 0; s < ops.size(); ++s) {
    Z src_deg = deg - ops[s].r;
    if (src_deg < 0) continue;
    auto src_mons = monomials_of_degree(p.rank(), src_deg, opt.reversed_monomial_order);
    QMat src_basis = invariant_basis(src_groups[s], src_deg, src_mons);
    std::size_t k = src_basis.empty() ? 0 : src_basis[0].size();
    for (std::size_t j = 0; j < k; ++j) {
      QVec col(src_basis.size());
      for (std::size_t i = 0; i < src_basis.size(); ++i) col[i] = src_basis[i][j];
      Poly f = from_coefficients(p.rank(), src_mons, col);
      Poly out = induce(ops[s], f);
      QVec oc = coefficient_vector(out, tgt_mons);
      for (std::size_t i = 0; i < tgt_mons.size(); ++i) columns[i].push_back(oc[i]);
    }
  }
  column_echelon(columns);
  return columns;
}

std::map<Z, QMat> induction_image(const std::vector<PartitionClass>& sources, const PairVG& p,
                                  Z max_degree, const EngineOptions& opt) {
  std::vector<InductionOperator> ops;
  std::vector<FiniteGroup> src_groups;
  for (const auto& c : sources) {
    ops.push_back(make_induction(c, p, opt));
    src_groups.push_back(pointwise_stabilizer(p.group.weyl, c.torus));
  }
  std::map<Z, QMat> image;
  for (Z deg = 0; deg <= max_degree; ++deg)
    image[deg] = induction_image_degree(ops, src_groups, p, deg, opt);
  return image;
}

GradedImage image_graded_character(const PartitionClass& c, const PairVG& p, Z cutoff,
                                   const std::vector<GroupElement>& lifts,
                                   const EngineOptions& opt) {
  // Build the W-orbit of the class directly: keys, representative and torus
  // all move by the group action; d, r and the torus dimension are constant
  // on orbits.
  std::vector<PartitionClass> orbit;
  std::map<ClassKey, bool> seen;
  for (const auto& w : p.group.weyl.elements()) {
    PartitionClass moved = c;
    moved.key = act(w, c.key);
    moved.rep = act(w, c.rep);
    moved.torus = act(w, c.torus);
    if (seen.emplace(moved.key, true).second) orbit.push_back(std::move(moved));
  }

  std::vector<InductionOperator> ops;
  std::vector<FiniteGroup> src_groups;
  for (const auto& member : orbit) {
    ops.push_back(make_induction(member, p, opt));
    src_groups.push_back(pointwise_stabilizer(p.group.weyl, member.torus));
  }

  GradedImage out;
  out.character.group_order = static_cast<Z>(lifts.size());
  out.character.cutoff = cutoff;
  Z d = p.d();
  Z max_k = (cutoff + d) / 2;
  for (Z k = 0; k <= max_k; ++k) {
    Z n = 2 * k - d;
    if (n > cutoff) continue;
    QMat basis = induction_image_degree(ops, src_groups, p, k, opt);
    auto mons = monomials_of_degree(p.rank(), k, opt.reversed_monomial_order);
    QVec traces;
    traces.reserve(lifts.size());
    for (const auto& lift : lifts)
      traces.push_back(trace_on_subspace(basis, slice_action(lift, mons)));
    out.character.entries[n] = std::move(traces);
    out.by_degree[k] = std::move(basis);
  }
  return out;
}

Z GradedCharacter::dim_at(Z degree) const {
  auto it = entries.find(degree);
  if (it == entries.end() || it->second.empty()) return 0;
  const Q& d = it->second[0];
  if (d.get_den() != 1) throw std::logic_error("GradedCharacter: non-integral dimension");
  return static_cast<Z>(d.get_num().get_si());
}

std::map<Z, Z> GradedCharacter::dims() const {
  std::map<Z, Z> out;
  for (const auto& [deg, tr] : entries) {
    Z d = dim_at(deg);
    if (d != 0) out[deg] = d;
  }
  return out;
}

}  // namespace cohint

#include "cohint/group_data.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cohint {

void GroupDescriptor::sort_roots() { std::sort(roots.begin(), roots.end()); }
void SymmetricRep::sort_weights() { std::sort(weights.begin(), weights.end()); }

bool GroupDescriptor::roots_symmetric() const {
  std::map<ZVec, Z> count;
  for (const auto& r : roots) {
    if (r.is_zero()) return false;  // 0 is not a root
    ++count[r.coords];
  }
  for (const auto& [v, c] : count) {
    Weight w{v};
    auto it = count.find(w.negated().coords);
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

bool is_symmetric(const SymmetricRep& rep) {
  std::map<ZVec, Z> count;
  for (const auto& w : rep.weights) ++count[w.coords];
  for (const auto& [v, c] : count) {
    Weight w{v};
    auto it = count.find(w.negated().coords);
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

GroupDescriptor build_torus(std::size_t r) {
  GroupDescriptor g;
  g.rank = r;
  g.weyl = trivial_group(r);
  g.dim = static_cast<Z>(r);
  g.label = "torus(" + std::to_string(r) + ")";
  return g;
}

namespace {

std::vector<GroupElement> symmetric_group_generators(std::size_t n) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ZMat m(n, ZVec(n, 0));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
    m[i][i] = m[i + 1][i + 1] = 0;
    m[i][i + 1] = m[i + 1][i] = 1;
    gens.push_back(make_element(m));
  }
  return gens;
}

std::vector<Weight> gl_roots(std::size_t n) {
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ZVec v(n, 0);
      v[i] = 1;
      v[j] = -1;
      roots.push_back(Weight{v});
    }
  return roots;
}

}  // namespace

GroupDescriptor build_gl(std::size_t n) {
  GroupDescriptor g;
  g.rank = n;
  g.roots = gl_roots(n);
  g.sort_roots();
  g.weyl = FiniteGroup::generate(symmetric_group_generators(n), n);
  g.dim = static_cast<Z>(n * n);
  g.label = "gl(" + std::to_string(n) + ")";
  return g;
}

GroupDescriptor build_sl(std::size_t n) {
  // Modeled on the rank-n lattice; the determinant-one constraint only shows
  // up through the dimension.
  GroupDescriptor g = build_gl(n);
  g.dim = static_cast<Z>(n * n) - 1;
  g.label = "sl(" + std::to_string(n) + ")";
  return g;
}

GroupDescriptor build_product(const std::vector<GroupDescriptor>& factors) {
  GroupDescriptor g;
  for (const auto& f : factors) g.rank += f.rank;
  g.dim = 0;
  std::size_t offset = 0;
  std::vector<GroupElement> gens;
  std::string label;
  for (const auto& f : factors) {
    for (const auto& r : f.roots) {
      ZVec v(g.rank, 0);
      for (std::size_t i = 0; i < f.rank; ++i) v[offset + i] = r.coords[i];
      g.roots.push_back(Weight{v});
    }
    for (const auto& gen : f.weyl.generators()) {
      ZMat m(g.rank, ZVec(g.rank, 0));
      for (std::size_t i = 0; i < g.rank; ++i) m[i][i] = 1;
      for (std::size_t i = 0; i < f.rank; ++i)
        for (std::size_t j = 0; j < f.rank; ++j) m[offset + i][offset + j] = gen.matrix[i][j];
      gens.push_back(make_element(m));
    }
    g.dim += f.dim;
    if (!label.empty()) label += "x";
    label += f.label;
    offset += f.rank;
  }
  g.sort_roots();
  g.weyl = FiniteGroup::generate(gens, g.rank);
  g.label = label.empty() ? "trivial" : label;
  return g;
}

GroupDescriptor levi(const GroupDescriptor& g, const Cocharacter& lambda) {
  GroupDescriptor l;
  l.rank = g.rank;
  Z moved = 0;
  for (const auto& r : g.roots) {
    if (pair(lambda, r) == 0)
      l.roots.push_back(r);
    else
      ++moved;
  }
  l.dim = g.dim - moved;
  l.weyl = pointwise_stabilizer(g.weyl, RationalSubspace::span_z({lambda.coords}, g.rank));
  l.label = g.label + "^lambda";
  return l;
}

FixedAttracting fixed_and_attracting(const SymmetricRep& v, const GroupDescriptor& g,
                                     const Cocharacter& lambda) {
  FixedAttracting out;
  Z pos_v = 0;
  for (const auto& w : v.weights) {
    Z p = pair(lambda, w);
    if (p == 0)
      out.fixed.weights.push_back(w);
    else if (p > 0)
      ++pos_v;
  }
  out.fixed.sort_weights();
  Z pos_g = 0;
  Z moved = 0;
  for (const auto& r : g.roots) {
    Z p = pair(lambda, r);
    if (p != 0) ++moved;
    if (p > 0) ++pos_g;
  }
  out.d = out.fixed.dim() - (g.dim - moved);
  out.r = pos_v - pos_g;
  return out;
}

GroupElement CentralQuotient::descend(const GroupElement& w) const {
  std::size_t k = complement.size();
  QMat wq = q_from_z(w.matrix);
  QMat cmat(complement.empty() ? 0 : complement[0].size(), QVec(k, Q(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < complement[j].size(); ++i) cmat[i][j] = q_of(complement[j][i]);
  QMat image = q_mul(q_mul(projection, wq), cmat);
  ZMat out(k, ZVec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (image[i][j].get_den() != 1 || !image[i][j].get_num().fits_slong_p())
        throw std::logic_error("central_quotient: Weyl element does not descend integrally");
      out[i][j] = static_cast<Z>(image[i][j].get_num().get_si());
    }
  return make_element(out);
}

CentralQuotient central_quotient(const PairVG& p) {
  std::size_t r = p.rank();
  ZMat forms;
  for (const auto& w : p.rep.weights) forms.push_back(w.coords);
  for (const auto& root : p.group.roots) forms.push_back(root.coords);
  LatticeSplit split = integer_kernel_split(forms, r);

  CentralQuotient cq;
  cq.g0_dim = static_cast<Z>(split.kernel_basis.size());
  cq.complement = split.complement_basis;
  std::size_t k = split.complement_basis.size();

  // Basis matrix with kernel columns first, complement columns last; the
  // projection is the bottom block of its inverse.
  QMat basis(r, QVec(r, Q(0)));
  for (std::size_t j = 0; j < split.kernel_basis.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) basis[i][j] = q_of(split.kernel_basis[j][i]);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r; ++i) basis[i][split.kernel_basis.size() + j] = q_of(split.complement_basis[j][i]);
  QMat inv = r == 0 ? QMat{} : q_inverse(basis);
  cq.projection.assign(k, QVec(r, Q(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) cq.projection[i][j] = inv[split.kernel_basis.size() + i][j];

  // Descend weights and roots: evaluate on the complement basis.
  auto descend_form = [&](const Weight& w) {
    ZVec v(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      Z s = 0;
      for (std::size_t i = 0; i < r; ++i) s += w.coords[i] * split.complement_basis[j][i];
      v[j] = s;
    }
    return Weight{v};
  };
  PairVG q;
  q.group.rank = k;
  q.group.dim = p.group.dim - cq.g0_dim;
  q.group.label = p.group.label + "/center";
  for (const auto& w : p.rep.weights) q.rep.weights.push_back(descend_form(w));
  q.rep.sort_weights();
  for (const auto& root : p.group.roots) q.group.roots.push_back(descend_form(root));
  q.group.sort_roots();

  std::vector<GroupElement> gens;
  for (const auto& g : p.group.weyl.generators()) gens.push_back(cq.descend(g));
  q.group.weyl = FiniteGroup::generate(gens, k, p.group.weyl.order() + 1);
  cq.pair = std::move(q);
  return cq;
}

}  // namespace cohint

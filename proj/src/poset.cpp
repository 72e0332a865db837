#include "cohint/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cohint {

bool ClassKey::operator<(const ClassKey& o) const {
  if (v_fixed != o.v_fixed) return v_fixed < o.v_fixed;
  return roots < o.roots;
}

ClassKey act(const GroupElement& w, const ClassKey& key) {
  ClassKey out;
  out.v_fixed.reserve(key.v_fixed.size());
  for (const auto& b : key.v_fixed) out.v_fixed.push_back(act(w, b));
  out.roots.reserve(key.roots.size());
  for (const auto& b : key.roots) out.roots.push_back(act(w, b));
  std::sort(out.v_fixed.begin(), out.v_fixed.end());
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

bool PartitionClass::is_trivial(const PairVG& pair) const {
  return key.v_fixed.size() == pair.rep.weights.size() && key.roots.size() == pair.group.roots.size();
}

namespace {

// Primitive sign-normalized forms, one per hyperplane of the arrangement.
std::vector<Weight> hyperplane_forms(const PairVG& pair) {
  std::set<ZVec> seen;
  std::vector<Weight> out;
  auto add = [&](const Weight& w) {
    if (w.is_zero()) return;
    Z g = 0;
    for (Z c : w.coords) g = std::gcd(g, c < 0 ? -c : c);
    Weight prim = w;
    for (Z& c : prim.coords) c /= g;
    prim = normalize_sign(prim);
    if (seen.insert(prim.coords).second) out.push_back(prim);
  };
  for (const auto& w : pair.rep.weights) add(w);
  for (const auto& r : pair.group.roots) add(r);
  std::sort(out.begin(), out.end());
  return out;
}

RationalSubspace intersect_with_kernel(const RationalSubspace& s, const Weight& form) {
  const QMat& basis = s.basis();
  QVec vals(basis.size(), Q(0));
  std::size_t pivot = basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Q v(0);
    for (std::size_t j = 0; j < form.coords.size(); ++j) v += basis[i][j] * q_of(form.coords[j]);
    vals[i] = v;
    if (v != 0 && pivot == basis.size()) pivot = i;
  }
  if (pivot == basis.size()) return s;  // form vanishes identically
  QMat rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == pivot) continue;
    QVec v(basis[i]);
    Q f = vals[i] / vals[pivot];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[pivot][j];
    rows.push_back(std::move(v));
  }
  return RationalSubspace::span(rows, s.ambient_rank());
}

bool vanishes_on(const Weight& form, const RationalSubspace& s) {
  for (const auto& b : s.basis()) {
    Q v(0);
    for (std::size_t j = 0; j < form.coords.size(); ++j) v += b[j] * q_of(form.coords[j]);
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<PartitionClass> enumerate_classes(const PairVG& pair) {
  if (!is_symmetric(pair.rep))
    throw std::invalid_argument("enumerate_classes: representation is not symmetric");
  std::size_t rank = pair.rank();
  std::vector<Weight> hyperplanes = hyperplane_forms(pair);

  // Flat lattice by iterated intersection; flats keyed by their canonical
  // echelon basis.
  std::vector<RationalSubspace> flats{RationalSubspace::full(rank)};
  std::set<RationalSubspace> seen{flats[0]};
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (const auto& h : hyperplanes) {
      RationalSubspace cut = intersect_with_kernel(flats[i], h);
      if (seen.insert(cut).second) flats.push_back(cut);
    }
  }

  std::vector<PartitionClass> classes;
  std::set<ClassKey> keys;
  for (const auto& flat : flats) {
    std::vector<Weight> avoid;
    for (const auto& h : hyperplanes)
      if (!vanishes_on(h, flat)) avoid.push_back(h);
    PartitionClass c;
    c.rep = generic_point(flat, avoid);
    for (const auto& w : pair.rep.weights)
      if (cohint::pair(c.rep, w) == 0) c.key.v_fixed.push_back(w);
    for (const auto& r : pair.group.roots)
      if (cohint::pair(c.rep, r) == 0) c.key.roots.push_back(r);
    std::sort(c.key.v_fixed.begin(), c.key.v_fixed.end());
    std::sort(c.key.roots.begin(), c.key.roots.end());
    std::vector<Weight> vanishing = c.key.v_fixed;
    vanishing.insert(vanishing.end(), c.key.roots.begin(), c.key.roots.end());
    c.torus = common_kernel(vanishing, rank);
    if (!(c.torus == flat))
      throw std::logic_error("enumerate_classes: flat is not its own preferred representative");
    c.g_dim = static_cast<Z>(c.torus.dim());
    FixedAttracting fa = fixed_and_attracting(pair.rep, pair.group, c.rep);
    c.d = fa.d;
    c.r = fa.r;
    if (!keys.insert(c.key).second)
      throw std::logic_error("enumerate_classes: duplicate class key from distinct flats");
    classes.push_back(std::move(c));
  }
  return classes;
}

bool leq(const PartitionClass& a, const PartitionClass& b) {
  return std::includes(b.key.v_fixed.begin(), b.key.v_fixed.end(), a.key.v_fixed.begin(),
                       a.key.v_fixed.end()) &&
         std::includes(b.key.roots.begin(), b.key.roots.end(), a.key.roots.begin(),
                       a.key.roots.end());
}

PosetData weyl_structure(const std::vector<PartitionClass>& classes, const PairVG& pair) {
  PosetData out;
  out.classes = classes;
  const FiniteGroup& w = pair.group.weyl;
  std::map<ClassKey, std::size_t> by_key;
  for (std::size_t i = 0; i < classes.size(); ++i) by_key[classes[i].key] = i;

  // Permutation action of every group element on the class list.
  std::vector<std::vector<std::size_t>> perm(w.order(), std::vector<std::size_t>(classes.size()));
  for (std::size_t e = 0; e < w.order(); ++e) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ClassKey moved = act(w.elements()[e], classes[i].key);
      auto it = by_key.find(moved);
      if (it == by_key.end())
        throw std::logic_error("weyl_structure: group action does not permute classes");
      perm[e][i] = it->second;
    }
  }

  out.orbit_of.assign(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (out.orbit_of[i] != classes.size()) continue;
    std::vector<std::size_t> orbit;
    std::set<std::size_t> members;
    for (std::size_t e = 0; e < w.order(); ++e) members.insert(perm[e][i]);
    for (std::size_t m : members) {
      out.orbit_of[m] = out.orbits.size();
      orbit.push_back(m);
    }
    out.orbits.push_back(std::move(orbit));
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    ClassWeylData data;
    std::vector<GroupElement> stab;
    for (std::size_t e = 0; e < w.order(); ++e)
      if (perm[e][i] == i) stab.push_back(w.elements()[e]);
    data.stabilizer = FiniteGroup::generate(stab, pair.rank(), w.order() + 1);
    data.pointwise = pointwise_stabilizer(w, classes[i].torus);
    data.lifts = coset_representatives(data.stabilizer, data.pointwise);
    out.weyl.push_back(std::move(data));
  }

  // Hasse diagram of covering pairs.
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j || !leq(classes[i], classes[j])) continue;
      if (classes[i].key == classes[j].key) continue;
      bool covered = true;
      for (std::size_t k = 0; k < classes.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (leq(classes[i], classes[k]) && leq(classes[k], classes[j]) &&
            !(classes[k].key == classes[i].key) && !(classes[k].key == classes[j].key))
          covered = false;
      }
      if (covered) out.hasse.emplace_back(i, j);
    }

  out.trivial_index = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].is_trivial(pair)) out.trivial_index = i;
  if (out.trivial_index == classes.size())
    throw std::logic_error("weyl_structure: no trivial class found");
  return out;
}

PairVG sub_pair(const PartitionClass& c, const PairVG& pair) {
  PairVG sub;
  sub.rep.weights = c.key.v_fixed;
  sub.group.rank = pair.rank();
  sub.group.roots = c.key.roots;
  sub.group.dim = pair.group.dim -
                  static_cast<Z>(pair.group.roots.size() - c.key.roots.size());
  sub.group.weyl = pointwise_stabilizer(pair.group.weyl, c.torus);
  sub.group.label = pair.group.label + "^levi";
  return sub;
}

std::vector<PartitionClass> subclasses_of(const PartitionClass& c, const PairVG& pair) {
  return enumerate_classes(sub_pair(c, pair));
}

}  // namespace cohint

#include "cohint/weyl.hpp"

#include <deque>
#include <stdexcept>

namespace cohint {

GroupElement identity_element(std::size_t rank) {
  ZMat m(rank, ZVec(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
  return GroupElement{m, m};
}

namespace {

ZMat z_mul(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size();
  ZMat c(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

ZMat integer_inverse(const ZMat& m) {
  QMat inv;
  try {
    inv = q_inverse(q_from_z(m));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("non-invertible generator");
  }
  ZMat out(m.size(), ZVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (inv[i][j].get_den() != 1) throw std::invalid_argument("non-invertible generator (not unimodular)");
      if (!inv[i][j].get_num().fits_slong_p()) throw std::overflow_error("inverse entry too large");
      out[i][j] = inv[i][j].get_num().get_si();
    }
  return out;
}

}  // namespace

GroupElement make_element(const ZMat& m) { return GroupElement{m, integer_inverse(m)}; }

GroupElement product(const GroupElement& a, const GroupElement& b) {
  return GroupElement{z_mul(a.matrix, b.matrix), z_mul(b.inverse, a.inverse)};
}

Cocharacter act(const GroupElement& w, const Cocharacter& v) {
  ZVec out(v.coords.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += w.matrix[i][j] * v.coords[j];
  return Cocharacter{out};
}

Weight act(const GroupElement& w, const Weight& beta) {
  // (w·beta)(v) = beta(w^{-1} v): row vector times inverse matrix.
  ZVec out(beta.coords.size(), 0);
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[j] += beta.coords[i] * w.inverse[i][j];
  return Weight{out};
}

RationalSubspace act(const GroupElement& w, const RationalSubspace& s) {
  QMat rows;
  QMat wm = q_from_z(w.matrix);
  for (const auto& b : s.basis()) rows.push_back(q_mul_vec(wm, b));
  return RationalSubspace::span(rows, s.ambient_rank());
}

FiniteGroup FiniteGroup::generate(const std::vector<GroupElement>& generators, std::size_t rank,
                                  std::size_t cap) {
  FiniteGroup g;
  g.rank_ = rank;
  g.generators_ = generators;
  for (const auto& gen : generators)
    if (gen.rank() != rank) throw std::invalid_argument("generate: generator rank mismatch");

  GroupElement id = identity_element(rank);
  g.elements_.push_back(id);
  g.index_[id.matrix] = 0;
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (const auto& gen : generators) {
      GroupElement next = product(gen, g.elements_[i]);
      if (g.index_.count(next.matrix)) continue;
      if (g.elements_.size() >= cap) throw std::runtime_error("group too large (cap exceeded)");
      g.index_[next.matrix] = g.elements_.size();
      g.elements_.push_back(next);
      todo.push_back(g.elements_.size() - 1);
    }
  }
  return g;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g.matrix);
  if (it == index_.end()) throw std::invalid_argument("element not in group");
  return it->second;
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& bigger) const {
  for (const auto& e : elements_)
    if (!bigger.contains(e)) return false;
  return true;
}

FiniteGroup trivial_group(std::size_t rank) { return FiniteGroup::generate({}, rank); }

FiniteGroup pointwise_stabilizer(const FiniteGroup& w, const RationalSubspace& s) {
  std::vector<GroupElement> kept;
  for (const auto& g : w.elements()) {
    bool fixes = true;
    QMat gm = q_from_z(g.matrix);
    for (const auto& b : s.basis()) {
      if (q_mul_vec(gm, b) != b) {
        fixes = false;
        break;
      }
    }
    if (fixes) kept.push_back(g);
  }
  return FiniteGroup::generate(kept, w.rank(), w.order() + 1);
}

std::vector<GroupElement> coset_representatives(const FiniteGroup& w, const FiniteGroup& h) {
  if (!h.is_subgroup_of(w)) throw std::invalid_argument("coset_representatives: H is not a subgroup of W");
  std::vector<GroupElement> reps;
  std::map<ZMat, bool> seen;
  for (const auto& g : w.elements()) {
    if (seen.count(g.matrix)) continue;
    reps.push_back(g);
    for (const auto& e : h.elements()) {
      GroupElement m = product(g, e);  // left coset gH
      seen[m.matrix] = true;
    }
  }
  if (reps.size() * h.order() != w.order())
    throw std::logic_error("coset_representatives: coset count mismatch");
  return reps;
}

bool is_normal_in(const FiniteGroup& h, const FiniteGroup& w) {
  for (const auto& g : w.elements()) {
    GroupElement ginv{g.inverse, g.matrix};
    for (const auto& e : h.elements()) {
      GroupElement conj = product(product(g, e), ginv);
      if (!h.contains(conj)) return false;
    }
  }
  return true;
}

}  // namespace cohint

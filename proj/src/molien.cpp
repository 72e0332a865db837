#include "cohint/molien.hpp"

#include <stdexcept>

namespace cohint {

namespace {

// det(I - t M) as coefficient vector (degree 0..n), by cofactor expansion
// over polynomial entries in t. Sizes here are tiny (n <= rank).
std::vector<Q> char_poly_coeffs(const QMat& m) {
  std::size_t n = m.size();
  // Entries of I - tM are linear in t: (a + b t) with a = delta_ij, b = -m_ij.
  using Lin = std::pair<Q, Q>;
  std::vector<std::vector<Lin>> e(n, std::vector<Lin>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = {Q(i == j ? 1 : 0), -m[i][j]};

  std::vector<Q> det{Q(1)};  // polynomial in t, det of the empty matrix
  // Laplace expansion along first column, recursively on row subsets.
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  auto poly_mul_lin = [](const std::vector<Q>& p, const Lin& l) {
    std::vector<Q> out(p.size() + 1, Q(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] += p[i] * l.first;
      out[i + 1] += p[i] * l.second;
    }
    return out;
  };
  auto rec = [&](auto&& self, std::vector<std::size_t> rs, std::size_t col) -> std::vector<Q> {
    if (rs.empty()) return {Q(1)};
    std::vector<Q> acc;
    int sign = 1;
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const Lin& entry = e[rs[k]][col];
      if (entry.first != 0 || entry.second != 0) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < rs.size(); ++t)
          if (t != k) rest.push_back(rs[t]);
        std::vector<Q> minor = self(self, rest, col + 1);
        std::vector<Q> term = poly_mul_lin(minor, entry);
        if (acc.size() < term.size()) acc.resize(term.size(), Q(0));
        for (std::size_t t = 0; t < term.size(); ++t) acc[t] += (sign > 0 ? term[t] : -term[t]);
      }
      sign = -sign;
    }
    if (acc.empty()) acc.push_back(Q(0));
    return acc;
  };
  return rec(rec, rows, 0);
}

}  // namespace

Q molien_trace(const QMat& m, Z degree) {
  if (degree < 0) return Q(0);
  std::size_t n = m.size();
  if (n == 0) return degree == 0 ? Q(1) : Q(0);
  QMat minv = q_inverse(m);
  std::vector<Q> den = char_poly_coeffs(minv);  // det(I - t m^{-1})
  // Power series inverse: h_d = -(sum_{i>=1} den[i] h_{d-i}) / den[0].
  if (den.empty() || den[0] == 0) throw std::logic_error("molien_trace: degenerate denominator");
  std::vector<Q> h(static_cast<std::size_t>(degree) + 1, Q(0));
  h[0] = 1 / den[0];
  for (Z d = 1; d <= degree; ++d) {
    Q s(0);
    for (Z i = 1; i <= d && i < static_cast<Z>(den.size()); ++i)
      s += den[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(d - i)];
    h[static_cast<std::size_t>(d)] = -s / den[0];
  }
  return h[static_cast<std::size_t>(degree)];
}

QMat restrict_to_subspace(const GroupElement& w, const RationalSubspace& s) {
  std::size_t k = s.dim();
  std::size_t r = s.ambient_rank();
  QMat bt(r, QVec(k, Q(0)));  // basis vectors as columns
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) bt[j][i] = s.basis()[i][j];
  QMat wb = q_mul(q_from_z(w.matrix), bt);
  auto m = solve_in_column_space(bt, wb);
  if (!m) throw std::invalid_argument("restrict_to_subspace: element does not preserve subspace");
  if (m->empty() && k > 0) return QMat(k, QVec(k, Q(0)));
  return *m;
}

Q molien_invariant_dimension(const FiniteGroup& w, Z degree) {
  Q total(0);
  for (const auto& g : w.elements()) total += molien_trace(q_from_z(g.matrix), degree);
  return total / Q(static_cast<long>(w.order()));
}

QMat invariant_basis(const FiniteGroup& w, Z degree, const std::vector<Exponents>& monomials) {
  std::size_t n = monomials.size();
  if (n == 0) return {};
  std::size_t nvars = monomials[0].size();
  QMat columns(n, QVec(n, Q(0)));
  Q inv_order = Q(1) / Q(static_cast<long>(w.order()));
  for (std::size_t j = 0; j < n; ++j) {
    Poly reynolds = Poly::zero(nvars);
    Poly mono = Poly::monomial(monomials[j], Q(1));
    for (const auto& g : w.elements()) reynolds += apply(g, mono);
    reynolds = reynolds.scaled(inv_order);
    QVec col = coefficient_vector(reynolds, monomials);
    for (std::size_t i = 0; i < n; ++i) columns[i][j] = col[i];
  }
  column_echelon(columns);
  return columns;
}

}  // namespace cohint

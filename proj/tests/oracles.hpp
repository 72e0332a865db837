#pragma once

// Test-side oracles, independent of the library's echelon machinery:
// integer Bareiss elimination for ranks of symmetrized-monomial matrices.

#include "cohint/molien.hpp"

namespace cohint::testing {

inline long bareiss_rank(std::vector<std::vector<long long>> rows, std::size_t cols) {
  long rank = 0;
  long long prev = 1;
  std::size_t n = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t sel = r;
    while (sel < n && rows[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(rows[sel], rows[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++rank;
    ++r;
  }
  return rank;
}

// Dimension of degree-d invariants by brute-force symmetrization of every
// monomial and an integer rank count.
inline long brute_invariant_dim(const FiniteGroup& w, Z degree) {
  auto mons = monomials_of_degree(w.rank(), degree);
  std::vector<std::vector<long long>> rows;
  for (const auto& m : mons) {
    Poly sym = Poly::zero(w.rank());
    for (const auto& g : w.elements()) sym += apply(g, Poly::monomial(m, Q(1)));
    std::vector<long long> row;
    for (const auto& m2 : mons) {
      auto it = sym.terms.find(m2);
      Q c = it == sym.terms.end() ? Q(0) : it->second;
      if (c.get_den() != 1) throw std::logic_error("brute_invariant_dim: non-integer symmetrization");
      row.push_back(c.get_num().get_si());
    }
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows), mons.size());
}

}  // namespace cohint::testing

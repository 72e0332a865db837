#include "cohint/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cohint {

Poly Poly::zero(std::size_t nvars) { return Poly{nvars, {}}; }

Poly Poly::constant(std::size_t nvars, const Q& c) {
  Poly p{nvars, {}};
  if (c != 0) p.terms[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::monomial(const Exponents& e, const Q& c) {
  Poly p{e.size(), {}};
  if (c != 0) p.terms[e] = c;
  return p;
}

Poly Poly::linear_form(const Weight& w) {
  Poly p{w.coords.size(), {}};
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (w.coords[i] == 0) continue;
    Exponents e(w.coords.size(), 0);
    e[i] = 1;
    p.terms[e] = q_of(w.coords[i]);
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add_term(const Exponents& e, const Q& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

Poly Poly::scaled(const Q& c) const {
  Poly p{nvars, {}};
  if (c == 0) return p;
  for (const auto& [e, v] : terms) p.terms[e] = v * c;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly p{a.nvars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Poly apply(const GroupElement& w, const Poly& f) {
  std::size_t n = f.nvars;
  // Images of the coordinate forms under w.
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly img = Poly::zero(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (w.inverse[i][j] == 0) continue;
      Exponents e(n, 0);
      e[j] = 1;
      img.add_term(e, q_of(w.inverse[i][j]));
    }
    images.push_back(std::move(img));
  }
  Poly out = Poly::zero(n);
  for (const auto& [e, c] : f.terms) {
    Poly term = Poly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, images[i]);
    out += term;
  }
  return out;
}

std::optional<Poly> divide_by_linear(const Poly& f, const Weight& form) {
  std::size_t pivot = form.coords.size();
  for (std::size_t i = 0; i < form.coords.size(); ++i)
    if (form.coords[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == form.coords.size()) throw std::invalid_argument("divide_by_linear: zero form");
  Q lead = q_of(form.coords[pivot]);
  Poly ell = Poly::linear_form(form);
  Poly rem = f;
  Poly quot = Poly::zero(f.nvars);
  while (!rem.is_zero()) {
    auto lt = rem.terms.rbegin();  // lex-largest term
    if (lt->first[pivot] == 0) return std::nullopt;
    Exponents e = lt->first;
    --e[pivot];
    Q c = lt->second / lead;
    quot.add_term(e, c);
    Poly sub = mul(Poly::monomial(e, c), ell);
    rem -= sub;
  }
  return quot;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, Z degree, bool reversed) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  Exponents e(nvars, 0);
  // Recursive enumeration in lex-descending order.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, static_cast<int>(degree));
  if (reversed) std::reverse(out.begin(), out.end());
  return out;
}

QVec coefficient_vector(const Poly& f, const std::vector<Exponents>& monomials) {
  QVec out(monomials.size(), Q(0));
  std::map<Exponents, std::size_t> where;
  for (std::size_t i = 0; i < monomials.size(); ++i) where[monomials[i]] = i;
  for (const auto& [e, c] : f.terms) {
    auto it = where.find(e);
    if (it == where.end()) throw std::logic_error("coefficient_vector: monomial outside degree slice");
    out[it->second] = c;
  }
  return out;
}

Poly from_coefficients(std::size_t nvars, const std::vector<Exponents>& monomials, const QVec& coeffs) {
  Poly p = Poly::zero(nvars);
  for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], coeffs[i]);
  return p;
}

}  // namespace cohint

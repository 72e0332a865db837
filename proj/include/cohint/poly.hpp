#pragma once

/*
  Sparse multivariate polynomials over Q, just enough for graded invariant
  rings: products, linear substitutions (finite group elements acting on the
  coordinates), and exact division by linear forms. Terms are kept in a map
  under the default lexicographic order on exponent vectors, so the leading
  term of a linear form is its first nonzero coordinate — consistent with the
  sign normalization of weights.
*/

#include <map>
#include <optional>

#include "cohint/weyl.hpp"

namespace cohint {

using Exponents = std::vector<int>;

struct Poly {
  std::size_t nvars = 0;
  std::map<Exponents, Q> terms;

  static Poly zero(std::size_t nvars);
  static Poly constant(std::size_t nvars, const Q& c);
  static Poly monomial(const Exponents& e, const Q& c);
  static Poly linear_form(const Weight& w);

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // max total degree, -1 for zero

  void add_term(const Exponents& e, const Q& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Q& c) const;
  bool operator==(const Poly&) const = default;
};

Poly mul(const Poly& a, const Poly& b);

// (w·f)(x) = f(w^{-1} x): substitute x_i -> sum_j w.inverse[i][j] x_j.
Poly apply(const GroupElement& w, const Poly& f);

// Exact division by a linear form; nullopt if the form does not divide.
std::optional<Poly> divide_by_linear(const Poly& f, const Weight& form);

// Degree-d monomials in a fixed deterministic order (lex descending), with
// an option to reverse the order (used to check basis-order independence).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, Z degree, bool reversed = false);

// Coefficient vector of a homogeneous polynomial against a monomial list.
QVec coefficient_vector(const Poly& f, const std::vector<Exponents>& monomials);

Poly from_coefficients(std::size_t nvars, const std::vector<Exponents>& monomials, const QVec& coeffs);

}  // namespace cohint

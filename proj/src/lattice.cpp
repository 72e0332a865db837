#include "cohint/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cohint {

Z pair(const Cocharacter& lambda, const Weight& beta) {
  if (lambda.rank() != beta.rank())
    throw std::invalid_argument("pair: rank mismatch between cocharacter (" +
                                std::to_string(lambda.rank()) + ") and weight (" +
                                std::to_string(beta.rank()) + ")");
  Z s = 0;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) s += lambda.coords[i] * beta.coords[i];
  return s;
}

Weight normalize_sign(const Weight& w) {
  for (Z c : w.coords) {
    if (c > 0) return w;
    if (c < 0) return w.negated();
  }
  return w;
}

RationalSubspace RationalSubspace::full(std::size_t rank) {
  RationalSubspace s;
  s.ambient_ = rank;
  s.basis_ = q_identity(rank);
  return s;
}

RationalSubspace RationalSubspace::zero(std::size_t rank) {
  RationalSubspace s;
  s.ambient_ = rank;
  return s;
}

RationalSubspace RationalSubspace::span(const QMat& vectors, std::size_t rank) {
  RationalSubspace s;
  s.ambient_ = rank;
  s.basis_ = vectors;
  rref(s.basis_);
  return s;
}

RationalSubspace RationalSubspace::span_z(const ZMat& vectors, std::size_t rank) {
  return span(q_from_z(vectors), rank);
}

bool RationalSubspace::contains(const QVec& v) const {
  QVec r = v;
  // Reduce against the echelon basis.
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    if (r[p] == 0) continue;
    Q f = r[p];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * row[j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool RationalSubspace::operator<(const RationalSubspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (basis_.size() != o.basis_.size()) return basis_.size() < o.basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) {
      int c = cmp(basis_[i][j], o.basis_[i][j]);
      if (c != 0) return c < 0;
    }
  return false;
}

ZMat RationalSubspace::primitive_basis() const {
  ZMat out;
  for (const auto& row : basis_) {
    mpz_class lcm_den = 1;
    for (const auto& x : row) {
      mpz_class d = x.get_den();
      lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    ints.reserve(row.size());
    for (const auto& x : row) {
      mpz_class v = x.get_num() * (lcm_den / x.get_den());
      ints.push_back(v);
      g = gcd(g, v);
    }
    ZVec zrow;
    zrow.reserve(row.size());
    for (auto& v : ints) {
      mpz_class red = (g == 0) ? v : mpz_class(v / g);
      if (!red.fits_slong_p()) throw std::overflow_error("primitive_basis: entry too large");
      zrow.push_back(red.get_si());
    }
    out.push_back(std::move(zrow));
  }
  return out;
}

std::string RationalSubspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j) os << ",";
      os << basis_[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

RationalSubspace common_kernel(const std::vector<Weight>& forms, std::size_t rank) {
  for (const auto& f : forms)
    if (f.rank() != rank) throw std::invalid_argument("common_kernel: form rank mismatch");
  // Kernel of the stacked form matrix, via rref: free columns parameterize
  // the kernel; order-insensitive because rref of the sorted form set is
  // canonical either way (the row space does not depend on row order).
  QMat m;
  for (const auto& f : forms) m.push_back(q_from_z(f.coords));
  auto pivots = rref(m);
  std::vector<bool> is_pivot(rank, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMat kernel;
  for (std::size_t c = 0; c < rank; ++c) {
    if (is_pivot[c]) continue;
    QVec v(rank, Q(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    kernel.push_back(std::move(v));
  }
  return RationalSubspace::span(kernel, rank);
}

Cocharacter generic_point(const RationalSubspace& subspace, const std::vector<Weight>& avoid) {
  ZMat basis = subspace.primitive_basis();
  std::size_t k = basis.size();
  std::size_t rank = subspace.ambient_rank();

  // Precompute pairings of each basis vector with each avoid form, and
  // reject forms that vanish on the whole subspace.
  std::vector<ZVec> form_on_basis;
  for (const auto& f : avoid) {
    ZVec row(k, 0);
    bool all_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      Z s = 0;
      for (std::size_t j = 0; j < rank; ++j) s += basis[i][j] * f.coords[j];
      row[i] = s;
      if (s != 0) all_zero = false;
    }
    if (all_zero)
      throw std::invalid_argument("generic_point: form not avoidable (vanishes on subspace)");
    form_on_basis.push_back(std::move(row));
  }

  if (k == 0) return Cocharacter{ZVec(rank, 0)};

  constexpr Z kMaxHeight = 64;
  std::vector<Z> c(k, 0);
  for (Z h = 1; h <= kMaxHeight; ++h) {
    // Descending lexicographic tuples over {0..h}^k whose max coordinate is h.
    std::fill(c.begin(), c.end(), h);
    while (true) {
      if (*std::max_element(c.begin(), c.end()) == h) {
        bool ok = true;
        for (const auto& row : form_on_basis) {
          Z s = 0;
          for (std::size_t i = 0; i < k; ++i) s += c[i] * row[i];
          if (s == 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ZVec v(rank, 0);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < rank; ++j) v[j] += c[i] * basis[i][j];
          return Cocharacter{std::move(v)};
        }
      }
      // Next tuple, descending lex.
      std::size_t i = k;
      while (i > 0 && c[i - 1] == 0) --i;
      if (i == 0) break;
      --c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = h;
    }
  }
  throw std::runtime_error("generic_point: no point found within height bound");
}

}  // namespace cohint

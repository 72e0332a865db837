#include "cohint/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohint {

QMat q_identity(std::size_t n) {
  QMat m(n, QVec(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat q_from_z(const ZMat& a) {
  QMat m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].reserve(a[i].size());
    for (Z x : a[i]) m[i].push_back(q_of(x));
  }
  return m;
}

QVec q_from_z(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (Z x : v) out.push_back(q_of(x));
  return out;
}

QMat q_mul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  QMat c(n, QVec(m, Q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

QVec q_mul_vec(const QMat& a, const QVec& v) {
  QVec out(a.size(), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

bool q_is_zero(const QMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Q inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t q_rank(QMat m) { return rref(m).size(); }

void column_echelon(QMat& m) {
  if (m.empty()) return;
  std::size_t rows = m.size(), cols = m[0].size();
  QMat t(cols, QVec(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  rref(t);
  std::size_t k = t.size();
  QMat out(rows, QVec(k, Q(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < rows; ++i) out[i][j] = t[j][i];
  m = std::move(out);
}

QMat q_inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat m = a;
  QMat inv = q_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) throw std::invalid_argument("q_inverse: singular matrix");
    std::swap(m[sel], m[c]);
    std::swap(inv[sel], inv[c]);
    Q f = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Q g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<QMat> solve_in_column_space(const QMat& b, const QMat& c) {
  if (b.empty()) return q_is_zero(c) ? std::optional<QMat>(QMat{}) : std::nullopt;
  std::size_t rows = b.size(), k = b[0].size(), m = c.empty() ? 0 : c[0].size();
  if (k == 0) return q_is_zero(c) ? std::optional<QMat>(QMat{}) : std::nullopt;
  // Row-reduce the augmented system [B | C].
  QMat aug(rows, QVec(k + m, Q(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = b[i][j];
    for (std::size_t j = 0; j < m; ++j) aug[i][k + j] = c[i][j];
  }
  auto pivots = rref(aug);
  QMat x(k, QVec(m, Q(0)));
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] >= k) return std::nullopt;  // inconsistent: pivot in C block
    for (std::size_t j = 0; j < m; ++j) x[pivots[p]][j] = aug[p][k + j];
  }
  if (pivots.size() != k) throw std::invalid_argument("solve_in_column_space: rank-deficient basis");
  return x;
}

namespace {

// Hermite-style row reduction with unimodular tracking. Reduces `a` (n x m)
// by integer row operations while applying the same operations to `u`
// (n x n, starts as identity). Rows of `a` that end up zero correspond to
// rows of `u` spanning the left kernel.
void hermite_rows(ZMat& a, ZMat& u) {
  std::size_t n = a.size();
  if (n == 0) return;
  std::size_t m = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    // Euclidean elimination in column c below row r.
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (a[i][c] != 0 && (best == n || std::llabs(a[i][c]) < std::llabs(a[best][c]))) best = i;
      if (best == n) break;
      std::swap(a[best], a[r]);
      std::swap(u[best], u[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a[i][c] == 0) continue;
        Z q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < m; ++j) a[i][j] -= q * a[r][j];
        for (std::size_t j = 0; j < n; ++j) u[i][j] -= q * u[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] != 0) {
      if (a[r][c] < 0) {
        for (auto& x : a[r]) x = -x;
        for (auto& x : u[r]) x = -x;
      }
      ++r;
    }
  }
}

}  // namespace

LatticeSplit integer_kernel_split(const ZMat& forms, std::size_t rank) {
  // Work with the transpose: rows are the standard basis of Z^rank, columns
  // record the evaluation of each form. Zero rows after reduction give the
  // saturated kernel lattice; the rest complete it to a basis of Z^rank.
  ZMat a(rank, ZVec(forms.size(), 0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t f = 0; f < forms.size(); ++f) a[i][f] = forms[f][i];
  ZMat u(rank, ZVec(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) u[i][i] = 1;
  hermite_rows(a, u);
  LatticeSplit out;
  for (std::size_t i = 0; i < rank; ++i) {
    bool zero = true;
    for (Z x : a[i])
      if (x != 0) zero = false;
    if (zero)
      out.kernel_basis.push_back(u[i]);
    else
      out.complement_basis.push_back(u[i]);
  }
  return out;
}

}  // namespace cohint

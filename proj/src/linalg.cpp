#include "hamloop/linalg.hpp"

#include <algorithm>

namespace hamloop {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::InvalidParams, "vector dimension mismatch");
}

// In-place fraction-free style elimination over Q; returns the rank.
// `solution` (when non-null) receives the unique solution of [m | rhs].
std::size_t eliminate(QMat& m, QVec* rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    if (rhs) std::swap((*rhs)[pivot], (*rhs)[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational dot(const QVec& a, const QVec& b) {
  require_same_size(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IVec& a, const QVec& b) {
  require_same_size(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Int dot(const IVec& a, const IVec& b) {
  require_same_size(a.size(), b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  require_same_size(a.size(), b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  require_same_size(a.size(), b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const QVec& a, const Rational& s) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

std::optional<QVec> solve_square(QMat a, QVec b) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n) return std::nullopt;
  if (eliminate(a, &b) != n) return std::nullopt;
  QVec x(n);
  // eliminate() leaves a diagonal system with pivot rows in order
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t c = 0;
    while (c < n && a[r][c] == 0) ++c;
    x[c] = b[r] / a[r][c];
  }
  return x;
}

std::size_t rank(QMat m) {
  if (m.empty()) return 0;
  return eliminate(m, nullptr);
}

std::size_t affine_rank(const std::vector<QVec>& points) {
  if (points.size() <= 1) return 0;
  QMat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

std::optional<IVec> line_kernel(const IMat& rows, std::size_t n) {
  if (rows.size() + 1 != n) return std::nullopt;
  if (n == 1) return IVec{Int(1)};
  QMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    QVec q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rational(r[j]);
    m.push_back(std::move(q));
  }
  QMat reduced = m;
  if (eliminate(reduced, nullptr) != n - 1) return std::nullopt;
  // locate the free column, then back-substitute with the free variable = 1
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col(n - 1);
  for (std::size_t r = 0; r < n - 1; ++r) {
    std::size_t c = 0;
    while (c < n && reduced[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  QVec k(n, Rational(0));
  k[free_col] = 1;
  for (std::size_t r = 0; r < n - 1; ++r)
    k[pivot_col[r]] = -reduced[r][free_col] / reduced[r][pivot_col[r]];
  // clear denominators, reduce content
  Int l = common_denominator(k);
  IVec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = num(k[j] * Rational(l));
  return primitive(std::move(out));
}

Int gcd_of(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IVec primitive(IVec v) {
  Int g = gcd_of(v);
  if (g == 0) throw Error(ErrorCode::InvalidParams, "zero vector has no primitive form");
  for (auto& x : v) x /= g;
  return v;
}

Int det(IMat m) {
  const std::size_t n = m.size();
  if (n == 0 || m[0].size() != n) throw Error(ErrorCode::InvalidParams, "det needs a square matrix");
  // Bareiss fraction-free elimination
  Int prev = 1;
  Int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<IMat> inverse_unimodular(const IMat& u) {
  const std::size_t n = u.size();
  Int d = det(u);
  if (d != 1 && d != -1) return std::nullopt;
  // solve U x = e_i column by column; solutions are integral since |det| = 1
  IMat inv(n, IVec(n));
  for (std::size_t col = 0; col < n; ++col) {
    QMat a(n, QVec(n));
    QVec e(n, Rational(0));
    e[col] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(u[i][j]);
    auto x = solve_square(std::move(a), std::move(e));
    for (std::size_t i = 0; i < n; ++i) inv[i][col] = num((*x)[i]);
  }
  return inv;
}

IVec matvec(const IMat& m, const IVec& v) {
  IVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

QVec matvec(const IMat& m, const QVec& v) {
  QVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

IMat transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat t(m[0].size(), IVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace hamloop

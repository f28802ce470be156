#include "hamloop/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hamloop {

namespace {

// Visits all k-subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Exact Fourier-Motzkin feasibility for A x <= b. Only used to classify
// degenerate inputs (empty vs unbounded), so the blow-up is acceptable.
bool fm_feasible(const std::vector<HalfSpace>& hs, std::size_t n) {
  // rows store (coefficients..., level)
  std::vector<QVec> rows;
  rows.reserve(hs.size());
  for (const auto& h : hs) {
    QVec r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = Rational(h.conormal[j]);
    r[n] = h.level;
    rows.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<QVec> pos, neg, zero;
    for (auto& r : rows) {
      if (r[k] > 0)
        pos.push_back(r);
      else if (r[k] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<QVec> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        QVec r(n + 1);
        for (std::size_t j = 0; j <= n; ++j) r[j] = p[j] / p[k] - q[j] / q[k];
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r[n] < 0) return false;
  return true;
}

// Nonzero integer direction d with <d, conormal_i> <= 0 for all i, if any.
// The recession cone is pointed here (callers guarantee rank n), so it is
// nonzero iff it has an extreme ray, and extreme rays lie on n-1 independent
// active constraints.
std::optional<IVec> recession_ray(const std::vector<HalfSpace>& hs, std::size_t n) {
  auto admissible = [&](const IVec& d) {
    for (const auto& h : hs)
      if (dot(h.conormal, d) > 0) return false;
    return true;
  };
  std::optional<IVec> found;
  for_each_subset(hs.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    IMat rows;
    rows.reserve(n - 1);
    for (auto i : idx) rows.push_back(hs[i].conormal);
    auto d = line_kernel(rows, n);
    if (!d) return;
    if (admissible(*d)) {
      found = *d;
      return;
    }
    IVec neg(n);
    for (std::size_t j = 0; j < n; ++j) neg[j] = -(*d)[j];
    if (admissible(neg)) found = neg;
  });
  return found;
}

}  // namespace

HalfSpace::HalfSpace(IVec c, Rational l) : conormal(std::move(c)), level(std::move(l)) {
  Int g = gcd_of(conormal);
  if (g == 0) throw Error(ErrorCode::InvalidParams, "halfspace conormal must be nonzero");
  if (g != 1) {
    for (auto& x : conormal) x /= g;
    level /= Rational(g);
  }
}

Polytope Polytope::build(std::size_t dim, std::vector<HalfSpace> halfspaces) {
  if (dim < 1) throw Error(ErrorCode::InvalidParams, "dimension must be >= 1");
  if (halfspaces.empty()) throw Error(ErrorCode::InvalidParams, "no halfspaces given");
  for (const auto& h : halfspaces)
    if (h.conormal.size() != dim)
      throw Error(ErrorCode::InvalidParams, "conormal dimension mismatch");

  const std::size_t m = halfspaces.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (halfspaces[i] == halfspaces[j])
        throw Error(ErrorCode::RedundantHalfSpace,
                    "halfspace " + std::to_string(i) + " duplicates halfspace " + std::to_string(j));

  auto satisfies_all = [&](const QVec& x) {
    for (const auto& h : halfspaces)
      if (dot(h.conormal, x) > h.level) return false;
    return true;
  };

  // candidate vertices: unique solutions of n-subsets of facet equalities
  std::vector<QVec> verts;
  for_each_subset(m, dim, [&](const std::vector<std::size_t>& idx) {
    QMat a(dim, QVec(dim));
    QVec b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) a[r][c] = Rational(halfspaces[idx[r]].conormal[c]);
      b[r] = halfspaces[idx[r]].level;
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x || !satisfies_all(*x)) return;
    if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(std::move(*x));
  });

  if (verts.empty()) {
    if (!fm_feasible(halfspaces, dim)) throw Error(ErrorCode::EmptyPolytope, "constraints are infeasible");
    throw Error(ErrorCode::Unbounded, "feasible set has no vertex");
  }
  if (auto ray = recession_ray(halfspaces, dim)) {
    std::string d = "(";
    for (std::size_t j = 0; j < ray->size(); ++j) d += (j ? "," : "") + (*ray)[j].str();
    throw Error(ErrorCode::Unbounded, "recession direction " + d + ")");
  }
  if (affine_rank(verts) != dim)
    throw Error(ErrorCode::NotFullDimensional,
                "affine hull has dimension " + std::to_string(affine_rank(verts)));

  std::sort(verts.begin(), verts.end(), lex_less);

  // each halfspace must support a facet: its tight vertex set has affine rank n-1
  std::vector<std::vector<std::size_t>> facets_of_vertex(verts.size());
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<QVec> tight;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (dot(halfspaces[i].conormal, verts[v]) == halfspaces[i].level) {
        tight.push_back(verts[v]);
        facets_of_vertex[v].push_back(i);
      }
    if (tight.empty() || affine_rank(tight) != dim - 1)
      throw Error(ErrorCode::RedundantHalfSpace,
                  "halfspace " + std::to_string(i) + " does not support a facet");
  }

  Polytope p;
  p.dim_ = dim;
  p.halfspaces_ = std::move(halfspaces);
  p.vertices_ = std::move(verts);
  p.vertex_facets_ = std::move(facets_of_vertex);
  return p;
}

bool Polytope::contains(const QVec& x) const {
  if (x.size() != dim_) return false;
  for (const auto& h : halfspaces_)
    if (dot(h.conormal, x) > h.level) return false;
  return true;
}

bool Polytope::strictly_contains(const QVec& x) const {
  if (x.size() != dim_) return false;
  for (const auto& h : halfspaces_)
    if (dot(h.conormal, x) >= h.level) return false;
  return true;
}

std::vector<VertexFrame> vertex_frames(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<VertexFrame> frames;
  frames.reserve(p.vertices().size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto& tight = p.vertex_facets()[v];
    if (tight.size() != n)
      throw Error(ErrorCode::NotSimple, "vertex " + std::to_string(v) + " lies on " +
                                            std::to_string(tight.size()) + " facets");
    VertexFrame f;
    f.vertex = p.vertices()[v];
    f.edges.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      IMat rows;
      rows.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) rows.push_back(p.halfspaces()[tight[j]].conormal);
      auto d = line_kernel(rows, n);
      if (!d)
        throw Error(ErrorCode::NotSimple,
                    "vertex " + std::to_string(v) + " has dependent facet conormals");
      // inward: leaving the dropped facet must decrease its functional
      if (dot(p.halfspaces()[tight[k]].conormal, *d) > 0)
        for (auto& x : *d) x = -x;
      f.edges.push_back(std::move(*d));
    }
    Int d = det(IMat(f.edges));
    f.unimodular = (d == 1 || d == -1);
    frames.push_back(std::move(f));
  }
  return frames;
}

DelzantReport delzant_report(const Polytope& p) {
  const std::size_t n = p.dim();
  DelzantReport rep;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (p.vertex_facets()[v].size() != n) {
      rep.non_simple_vertices.push_back(v);
      continue;
    }
    IMat edges;
    edges.reserve(n);
    bool degenerate = false;
    for (std::size_t k = 0; k < n && !degenerate; ++k) {
      IMat rows;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) rows.push_back(p.halfspaces()[p.vertex_facets()[v][j]].conormal);
      auto d = line_kernel(rows, n);
      if (!d) {
        degenerate = true;
        break;
      }
      edges.push_back(std::move(*d));
    }
    if (degenerate) {
      rep.non_simple_vertices.push_back(v);
      continue;
    }
    Int d = det(std::move(edges));
    if (d != 1 && d != -1) rep.non_unimodular_vertices.push_back(v);
  }
  rep.delzant = rep.non_simple_vertices.empty() && rep.non_unimodular_vertices.empty();
  return rep;
}

bool is_delzant(const Polytope& p) { return delzant_report(p).delzant; }

namespace {

// Pulling triangulation of the face spanned by `verts` (indices into the
// polytope's lex-sorted vertex list) with affine dimension d.
void triangulate_face(const Polytope& p, const std::vector<std::size_t>& verts, std::size_t d,
                      std::vector<std::vector<std::size_t>>& out) {
  if (verts.size() == d + 1) {
    out.push_back(verts);
    return;
  }
  const std::size_t apex = verts[0];  // lex-smallest: global list is sorted
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    const auto& h = p.halfspaces()[i];
    std::vector<std::size_t> sub;
    for (auto v : verts)
      if (dot(h.conormal, p.vertices()[v]) == h.level) sub.push_back(v);
    if (sub.empty() || sub[0] == apex) continue;  // ascending, so apex can only be first
    std::vector<QVec> pts;
    pts.reserve(sub.size());
    for (auto v : sub) pts.push_back(p.vertices()[v]);
    if (affine_rank(pts) != d - 1) continue;
    if (!seen.insert(sub).second) continue;
    std::vector<std::vector<std::size_t>> sub_simplices;
    triangulate_face(p, sub, d - 1, sub_simplices);
    for (auto& s : sub_simplices) {
      std::vector<std::size_t> cone;
      cone.reserve(s.size() + 1);
      cone.push_back(apex);
      cone.insert(cone.end(), s.begin(), s.end());
      out.push_back(std::move(cone));
    }
  }
}

Rational simplex_volume(const std::vector<QVec>& s, std::size_t n) {
  QMat diffs;
  diffs.reserve(n);
  for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(sub(s[i], s[0]));
  // exact determinant over Q by elimination
  Rational d = 1;
  QMat m = std::move(diffs);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  if (d < 0) d = -d;
  Int fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  return d / Rational(fact);
}

}  // namespace

std::vector<std::vector<QVec>> triangulate(const Polytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate_face(p, all, p.dim(), simplices);
  std::vector<std::vector<QVec>> out;
  out.reserve(simplices.size());
  for (const auto& s : simplices) {
    std::vector<QVec> pts;
    pts.reserve(s.size());
    for (auto v : s) pts.push_back(p.vertices()[v]);
    out.push_back(std::move(pts));
  }
  return out;
}

Rational volume(const Polytope& p) {
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(s, p.dim());
  return total;
}

QVec centroid(const Polytope& p) {
  const std::size_t n = p.dim();
  Rational total = 0;
  QVec weighted(n, Rational(0));
  for (const auto& s : triangulate(p)) {
    Rational vol = simplex_volume(s, n);
    QVec c(n, Rational(0));
    for (const auto& v : s) c = add(c, v);
    c = scale(c, Rational(1, Int(n + 1)));
    total += vol;
    weighted = add(weighted, scale(c, vol));
  }
  return scale(weighted, Rational(1) / total);
}

bool is_quantizable(const Polytope& p) {
  for (const auto& v : p.vertices())
    for (const auto& x : v)
      if (!is_integer(x)) return false;
  return true;
}

Rational minimal_rescale(const Polytope& p) {
  const QVec& v0 = p.vertices().front();
  Rational g = 0;
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < v.size(); ++j) g = rational_gcd(g, v[j] - v0[j]);
  return g;  // nonzero: the polytope is full-dimensional
}

Polytope transform(const Polytope& p, const IMat& u, const QVec& w) {
  const std::size_t n = p.dim();
  if (u.size() != n || w.size() != n)
    throw Error(ErrorCode::InvalidParams, "transform dimension mismatch");
  auto inv = inverse_unimodular(u);
  if (!inv) throw Error(ErrorCode::NotUnimodular, "matrix determinant is not +-1");
  IMat inv_t = transpose(*inv);
  std::vector<HalfSpace> hs;
  hs.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) {
    IVec conormal = matvec(inv_t, h.conormal);
    Rational level = h.level + dot(conormal, w);
    hs.emplace_back(std::move(conormal), std::move(level));
  }
  return Polytope::build(n, std::move(hs));
}

}  // namespace hamloop

#include "fixcomb/geometry.hpp"

#include "fixcomb/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixcomb {
namespace {

void require_dim(const PolytopeDescriptor& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.ambient_dim()) {
    throw std::invalid_argument("point dimension does not match polytope");
  }
}

// Sign vectors of {-1,+1}^n in lexicographic order, -1 first.
std::vector<std::vector<int>> sign_vectors(int n) {
  std::vector<std::vector<int>> out;
  out.reserve(size_t(1) << n);
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

Rat facet_value(const Facet& f, const Point& x) {
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (f.normal[i] != 0) s += f.normal[i] * x[i];
  return s;
}

}  // namespace

const char* poly_kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::SIMPLEX: return "simplex";
    case PolyKind::CROSS: return "cross";
    case PolyKind::CUBE: return "cube";
  }
  return "?";
}

Location point_location(const PolytopeDescriptor& p, const Point& x) {
  require_dim(p, x);
  switch (p.kind) {
    case PolyKind::CROSS: {
      const Rat n = l1_norm(x);
      if (n > p.scale) return Location::OUTSIDE;
      return n == p.scale ? Location::BOUNDARY : Location::INTERIOR;
    }
    case PolyKind::CUBE: {
      const Rat n = linf_norm(x);
      if (n > p.scale) return Location::OUTSIDE;
      return n == p.scale ? Location::BOUNDARY : Location::INTERIOR;
    }
    case PolyKind::SIMPLEX: {
      if (coord_sum(x) != p.scale) return Location::OUTSIDE;
      bool tight = false;
      for (const Rat& c : x) {
        if (c < 0) return Location::OUTSIDE;
        if (c == 0) tight = true;
      }
      return tight ? Location::BOUNDARY : Location::INTERIOR;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Facet> facets(const PolytopeDescriptor& p) {
  std::vector<Facet> out;
  switch (p.kind) {
    case PolyKind::CROSS:
      for (auto& v : sign_vectors(p.dim)) out.push_back({std::move(v), p.scale});
      break;
    case PolyKind::CUBE:
      for (int i = 0; i < p.dim; ++i) {
        for (int s : {-1, 1}) {
          std::vector<int> n(p.dim, 0);
          n[i] = s;
          out.push_back({std::move(n), p.scale});
        }
      }
      break;
    case PolyKind::SIMPLEX:
      for (int i = 0; i < p.dim + 1; ++i) {
        std::vector<int> n(p.dim + 1, 0);
        n[i] = -1;
        out.push_back({std::move(n), Rat(0)});
      }
      break;
  }
  return out;
}

std::vector<Facet> active_constraints(const PolytopeDescriptor& p, const Point& x) {
  require_dim(p, x);
  if (point_location(p, x) == Location::OUTSIDE) {
    throw std::invalid_argument("active_constraints: point outside polytope");
  }
  std::vector<Facet> out;
  for (Facet& f : facets(p)) {
    if (facet_value(f, x) == f.rhs) out.push_back(std::move(f));
  }
  return out;
}

bool hull_meets_interior(const std::vector<Point>& pts, const PolytopeDescriptor& p) {
  if (pts.empty()) return false;
  for (const Point& q : pts) require_dim(p, q);
  const int k = static_cast<int>(pts.size());
  const int dim = p.ambient_dim();
  // Variables: w_0..w_{k-1} (convex weights), then eps. Maximize eps subject
  // to every facet having slack at least eps at the combined point.
  const int nv = k + 1;
  std::vector<lp::Row> rows;
  {
    std::vector<Rat> ones(nv, Rat(0));
    for (int j = 0; j < k; ++j) ones[j] = 1;
    rows.push_back({std::move(ones), lp::Sense::EQ, Rat(1)});
  }
  if (p.kind == PolyKind::SIMPLEX) {
    std::vector<Rat> row(nv, Rat(0));
    for (int j = 0; j < k; ++j) row[j] = coord_sum(pts[j]);
    rows.push_back({std::move(row), lp::Sense::EQ, p.scale});
  }
  for (const Facet& f : facets(p)) {
    std::vector<Rat> row(nv, Rat(0));
    for (int j = 0; j < k; ++j) {
      Rat s = 0;
      for (int i = 0; i < dim; ++i)
        if (f.normal[i] != 0) s += f.normal[i] * pts[j][i];
      row[j] = s;
    }
    row[k] = 1;  // eps
    rows.push_back({std::move(row), lp::Sense::LE, f.rhs});
  }
  std::vector<Rat> c(nv, Rat(0));
  c[k] = 1;
  const auto res = lp::maximize(nv, rows, c);
  return res.status == lp::Status::OPTIMAL && res.value > 0;
}

bool hull_contains(const std::vector<Point>& pts, const Point& x) {
  if (pts.empty()) return false;
  const int k = static_cast<int>(pts.size());
  const int dim = static_cast<int>(x.size());
  std::vector<lp::Row> rows;
  {
    std::vector<Rat> ones(k, Rat(1));
    rows.push_back({std::move(ones), lp::Sense::EQ, Rat(1)});
  }
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> row(k);
    for (int j = 0; j < k; ++j) row[j] = pts[j][i];
    rows.push_back({std::move(row), lp::Sense::EQ, x[i]});
  }
  return lp::feasible(k, rows);
}

bool hulls_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) return true;
  const int ka = static_cast<int>(a.size());
  const int kb = static_cast<int>(b.size());
  const int dim = static_cast<int>(a[0].size());
  const int nv = ka + kb;
  std::vector<lp::Row> rows;
  {
    std::vector<Rat> r(nv, Rat(0));
    for (int j = 0; j < ka; ++j) r[j] = 1;
    rows.push_back({std::move(r), lp::Sense::EQ, Rat(1)});
  }
  {
    std::vector<Rat> r(nv, Rat(0));
    for (int j = 0; j < kb; ++j) r[ka + j] = 1;
    rows.push_back({std::move(r), lp::Sense::EQ, Rat(1)});
  }
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> r(nv);
    for (int j = 0; j < ka; ++j) r[j] = a[j][i];
    for (int j = 0; j < kb; ++j) r[ka + j] = -b[j][i];
    rows.push_back({std::move(r), lp::Sense::EQ, Rat(0)});
  }
  return !lp::feasible(nv, rows);
}

namespace {

// Row echelon rank of the edge matrix.
int edge_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  const int rows = static_cast<int>(pts.size()) - 1;
  const int cols = static_cast<int>(pts[0].size());
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

struct BBox {
  Point lo, hi;
};

BBox bbox_of(const std::vector<Point>& pts) {
  BBox b{pts[0], pts[0]};
  for (size_t i = 1; i < pts.size(); ++i) {
    for (size_t j = 0; j < pts[i].size(); ++j) {
      if (pts[i][j] < b.lo[j]) b.lo[j] = pts[i][j];
      if (pts[i][j] > b.hi[j]) b.hi[j] = pts[i][j];
    }
  }
  return b;
}

bool bbox_disjoint(const BBox& a, const BBox& b) {
  for (size_t j = 0; j < a.lo.size(); ++j) {
    if (a.hi[j] < b.lo[j] || b.hi[j] < a.lo[j]) return true;
  }
  return false;
}

// Strict separation by a hyperplane containing the shared vertices: a
// sufficient certificate of proper intersection.
bool separated_through(const std::vector<Point>& s1, const std::vector<Point>& s2,
                       const std::vector<Point>& shared) {
  const int dim = static_cast<int>(s1[0].size());
  // Variables: a (free, split), beta (free, split), eps >= 0.
  const int nv = 2 * dim + 2 + 1;
  const int eps = 2 * dim + 2;
  auto coef = [&](const Point& v, int sign_v, int sign_beta, Rat eps_c) {
    std::vector<Rat> row(nv, Rat(0));
    for (int i = 0; i < dim; ++i) {
      row[2 * i] = sign_v * v[i];
      row[2 * i + 1] = -sign_v * v[i];
    }
    row[2 * dim] = sign_beta;
    row[2 * dim + 1] = -sign_beta;
    row[eps] = eps_c;
    return row;
  };
  std::vector<lp::Row> rows;
  auto is_shared = [&](const Point& v) {
    return std::find(shared.begin(), shared.end(), v) != shared.end();
  };
  for (const Point& v : s1) {
    if (is_shared(v)) continue;
    rows.push_back({coef(v, 1, -1, Rat(1)), lp::Sense::LE, Rat(0)});  // a.v - b + eps <= 0
  }
  for (const Point& v : s2) {
    if (is_shared(v)) continue;
    rows.push_back({coef(v, -1, 1, Rat(1)), lp::Sense::LE, Rat(0)});  // -a.v + b + eps <= 0
  }
  for (const Point& v : shared) {
    rows.push_back({coef(v, 1, -1, Rat(0)), lp::Sense::EQ, Rat(0)});  // a.v = b
  }
  // Box the normal so the optimum is finite.
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> r(nv, Rat(0));
    r[2 * i] = 1;
    r[2 * i + 1] = -1;
    rows.push_back({r, lp::Sense::LE, Rat(1)});
    for (Rat& q : r) q = -q;
    rows.push_back({std::move(r), lp::Sense::LE, Rat(1)});
  }
  std::vector<Rat> c(nv, Rat(0));
  c[eps] = 1;
  const auto res = lp::maximize(nv, rows, c);
  return res.status == lp::Status::OPTIMAL && res.value > 0;
}

}  // namespace

bool affinely_independent(const std::vector<Point>& pts) {
  if (pts.empty()) return false;
  return edge_rank(pts) == static_cast<int>(pts.size()) - 1;
}

Rat simplex_det(const std::vector<Point>& pts) {
  const int d = static_cast<int>(pts.size()) - 1;
  if (d < 0 || static_cast<int>(pts[0].size()) != d) {
    throw std::invalid_argument("simplex_det wants d+1 points of dimension d");
  }
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
  Rat det = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int i = col + 1; i < d; ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[col][col];
      for (int j = col; j < d; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

bool simplex_pair_ok(const std::vector<Point>& s1, const std::vector<Point>& s2) {
  if (!affinely_independent(s1) || !affinely_independent(s2)) {
    throw std::invalid_argument("simplex_pair_ok: affinely dependent input");
  }
  // Shared vertices are matched by exact coordinates.
  std::vector<Point> shared;
  for (const Point& v : s1) {
    if (std::find(s2.begin(), s2.end(), v) != s2.end()) shared.push_back(v);
  }
  if (shared.size() == s1.size() && shared.size() == s2.size()) return true;
  if (bbox_disjoint(bbox_of(s1), bbox_of(s2))) return true;
  if (shared.empty()) return hulls_disjoint(s1, s2);
  if (separated_through(s1, s2, shared)) return true;

  // Full criterion: every pair of vertex-disjoint nonempty faces must have
  // disjoint hulls. (Equivalent to the intersection being the shared face.)
  const int k1 = static_cast<int>(s1.size());
  const int k2 = static_cast<int>(s2.size());
  for (unsigned f1 = 1; f1 < (1u << k1); ++f1) {
    std::vector<Point> a;
    for (int i = 0; i < k1; ++i)
      if (f1 & (1u << i)) a.push_back(s1[i]);
    for (unsigned f2 = 1; f2 < (1u << k2); ++f2) {
      std::vector<Point> b;
      bool disjoint_vertices = true;
      for (int i = 0; i < k2 && disjoint_vertices; ++i) {
        if (!(f2 & (1u << i))) continue;
        if (std::find(a.begin(), a.end(), s2[i]) != a.end()) {
          disjoint_vertices = false;
        } else {
          b.push_back(s2[i]);
        }
      }
      if (!disjoint_vertices) continue;
      if (bbox_disjoint(bbox_of(a), bbox_of(b))) continue;
      if (!hulls_disjoint(a, b)) return false;
    }
  }
  return true;
}

}  // namespace fixcomb

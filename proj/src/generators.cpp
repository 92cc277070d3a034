#include "fixcomb/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fixcomb {

namespace {

// Odometer over {0..top}^n in lexicographic order; returns false at the end.
bool advance(std::vector<int>& tuple, int top) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (tuple[i] < top) {
      ++tuple[i];
      std::fill(tuple.begin() + i + 1, tuple.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

Triangulation cross_standard(int n, const Rat& scale) {
  if (n < 1) throw std::invalid_argument("cross_standard needs n >= 1");
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  Triangulation t;
  t.ambient = n;
  t.domain = PolytopeDescriptor{PolyKind::CROSS, n, scale};
  t.add_vertex(Point(n, Rat(0)));  // center, id 0
  std::vector<VertexId> plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    Point p(n, Rat(0)), q(n, Rat(0));
    p[i] = scale;
    q[i] = -scale;
    plus[i] = t.add_vertex(p);
    minus[i] = t.add_vertex(q);
  }
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Simplex s{0};
    for (int i = 0; i < n; ++i)
      s.push_back((mask >> (n - 1 - i)) & 1 ? plus[i] : minus[i]);
    t.add_simplex(s);
  }
  return t;
}

Triangulation freudenthal_cube(int n, int k, const Rat& scale) {
  if (n < 1 || k < 1) throw std::invalid_argument("freudenthal_cube needs n, k >= 1");
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  Triangulation t;
  t.ambient = n;
  t.domain = PolytopeDescriptor{PolyKind::CUBE, n, scale};

  auto grid_point = [&](const std::vector<int>& j) {
    Point p(n);
    for (int i = 0; i < n; ++i) p[i] = -scale + Rat(2 * j[i]) * scale / k;
    return p;
  };
  std::vector<int> node(n, 0);
  do {
    t.add_vertex(grid_point(node));  // ids in lexicographic grid order
  } while (advance(node, k));

  std::vector<int> cell(n, 0);
  do {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Simplex s;
      std::vector<int> cur = cell;
      s.push_back(*t.find_vertex(grid_point(cur)));
      for (int step = 0; step < n; ++step) {
        ++cur[perm[step]];
        s.push_back(*t.find_vertex(grid_point(cur)));
      }
      t.add_simplex(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (advance(cell, k - 1));
  return t;
}

Triangulation grid_simplex(int n, int k, const Rat& scale) {
  if (n < 1 || k < 1) throw std::invalid_argument("grid_simplex needs n, k >= 1");
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  Triangulation t;
  t.ambient = n + 1;
  t.domain = PolytopeDescriptor{PolyKind::SIMPLEX, n, scale};

  // Staircase cells of [0,k]^n restricted to y_1 >= ... >= y_n, mapped onto
  // the simplex by consecutive differences. The restriction keeps exactly the
  // cells inside the ordered region, k^n of them.
  auto ordered = [](const std::vector<int>& y) {
    for (size_t i = 1; i < y.size(); ++i)
      if (y[i - 1] < y[i]) return false;
    return true;
  };
  auto mapped = [&](const std::vector<int>& y) {
    Point x(n + 1);
    x[0] = scale * Rat(k - y[0]) / k;
    for (int i = 1; i < n; ++i) x[i] = scale * Rat(y[i - 1] - y[i]) / k;
    x[n] = scale * Rat(y[n - 1]) / k;
    return x;
  };

  std::vector<int> cell(n, 0);
  do {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<int>> chain{cell};
      for (int step = 0; step < n; ++step) {
        std::vector<int> next = chain.back();
        ++next[perm[step]];
        chain.push_back(std::move(next));
      }
      if (!std::all_of(chain.begin(), chain.end(), ordered)) continue;
      Simplex s;
      for (const auto& y : chain) s.push_back(t.add_vertex(mapped(y)));
      t.add_simplex(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (advance(cell, k - 1));
  return t;
}

Triangulation barycentric_subdivide(const Triangulation& t) {
  Triangulation out;
  out.ambient = t.ambient;
  out.domain = t.domain;
  out.boundary_of = t.boundary_of;
  for (const Simplex& top : t.maximal_simplices()) {
    std::vector<VertexId> perm = top;  // sorted already
    do {
      Simplex chain;
      Point sum(t.ambient, Rat(0));
      for (size_t d = 0; d < perm.size(); ++d) {
        const Point& p = t.point_of(perm[d]);
        for (int i = 0; i < t.ambient; ++i) sum[i] += p[i];
        Point b = sum;
        for (auto& x : b) x /= Rat(static_cast<int>(d + 1));
        chain.push_back(out.add_vertex(b));
      }
      out.add_simplex(chain);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Triangulation scaled_copy(const Triangulation& t, const Rat& factor) {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  Triangulation out = t;
  for (auto& [v, p] : out.coords)
    for (auto& x : p) x *= factor;
  if (out.domain) out.domain->scale *= factor;
  if (out.boundary_of) out.boundary_of->scale *= factor;
  out.rebuild_vertex_index();
  return out;
}

namespace {

int parse_positive_int(const std::string& s, const char* what) {
  size_t used = 0;
  int v;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + s);
  }
  if (used != s.size() || v < 0) throw std::invalid_argument(std::string("bad ") + what + ": " + s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
  if (text.rfind("bary(", 0) == 0) {
    if (text.back() != ')') throw std::invalid_argument("unbalanced bary(...): " + text);
    std::string body = text.substr(5, text.size() - 6);
    int depth = 0;
    size_t comma = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ',' && depth == 0) comma = i;  // last top-level comma
    }
    if (comma == std::string::npos)
      throw std::invalid_argument("bary needs rounds=<r>: " + text);
    std::string tail = body.substr(comma + 1);
    if (tail.rfind("rounds=", 0) != 0)
      throw std::invalid_argument("bary needs rounds=<r>: " + text);
    GeneratorSpec spec = parse_generator_spec(body.substr(0, comma));
    spec.rounds += parse_positive_int(tail.substr(7), "rounds");
    return spec;
  }

  std::vector<std::string> parts = split(text, ':');
  GeneratorSpec spec;
  if (parts[0] == "cross") {
    if (parts.size() != 2) throw std::invalid_argument("expected cross:<n>: " + text);
    spec.base = GeneratorSpec::Base::CROSS_STANDARD;
    spec.n = parse_positive_int(parts[1], "n");
  } else if (parts[0] == "cube" || parts[0] == "simplex") {
    spec.base = parts[0] == "cube" ? GeneratorSpec::Base::FREUDENTHAL_CUBE
                                   : GeneratorSpec::Base::GRID_SIMPLEX;
    if (parts.size() == 2) {
      spec.n = parse_positive_int(parts[1], "n");
    } else if (parts.size() == 3 && parts[2].rfind("k=", 0) == 0) {
      spec.n = parse_positive_int(parts[1], "n");
      spec.k = parse_positive_int(parts[2].substr(2), "k");
    } else {
      throw std::invalid_argument("expected " + parts[0] + ":<n>[:k=<k>]: " + text);
    }
  } else {
    throw std::invalid_argument("unknown generator: " + text);
  }
  if (spec.n < 1 || spec.k < 1) throw std::invalid_argument("n and k must be >= 1: " + text);
  return spec;
}

std::string generator_spec_to_string(const GeneratorSpec& spec) {
  std::string base;
  switch (spec.base) {
    case GeneratorSpec::Base::CROSS_STANDARD:
      base = "cross:" + std::to_string(spec.n);
      break;
    case GeneratorSpec::Base::FREUDENTHAL_CUBE:
      base = "cube:" + std::to_string(spec.n) + ":k=" + std::to_string(spec.k);
      break;
    case GeneratorSpec::Base::GRID_SIMPLEX:
      base = "simplex:" + std::to_string(spec.n) + ":k=" + std::to_string(spec.k);
      break;
  }
  if (spec.rounds == 0) return base;
  return "bary(" + base + ",rounds=" + std::to_string(spec.rounds) + ")";
}

Triangulation generate(const GeneratorSpec& spec) {
  Triangulation t;
  switch (spec.base) {
    case GeneratorSpec::Base::CROSS_STANDARD: t = cross_standard(spec.n); break;
    case GeneratorSpec::Base::FREUDENTHAL_CUBE: t = freudenthal_cube(spec.n, spec.k); break;
    case GeneratorSpec::Base::GRID_SIMPLEX: t = grid_simplex(spec.n, spec.k); break;
  }
  for (int r = 0; r < spec.rounds; ++r) t = barycentric_subdivide(t);
  return t;
}

namespace {

std::string level_msg(const char* what, int level) {
  return std::string(what) + " at chain level " + std::to_string(level);
}

}  // namespace

HemisphereChain hemisphere_chain(const Triangulation& t) {
  if (!t.domain || t.domain->kind != PolyKind::CROSS)
    throw std::invalid_argument("hemisphere chains need a cross-polytope domain");
  int n = t.domain->dim;
  Rat s = t.domain->scale;

  HemisphereChain chain;
  chain.levels.assign(n + 1, Triangulation{});
  chain.levels[n] = t;

  for (int i = n; i >= 1; --i) {
    const Triangulation& cur = chain.levels[i];
    if (!validate_triangulation(cur).ok)
      throw std::runtime_error(level_msg("invalid triangulation", i));
    Triangulation b = boundary_complex(cur);
    if (!check_antipodal_symmetry(b))
      throw std::runtime_error(level_msg("boundary is not antipodally symmetric", i));

    // Upper hemisphere: simplices whose vertices all have last coordinate
    // >= 0. Its negation is the lower one; for a cross polytope every
    // boundary simplex has one-signed last coordinates, so together they
    // must cover the whole boundary.
    std::set<Simplex> upper, covered;
    for (const Simplex& sx : b.simplices) {
      bool up = true, down = true;
      for (VertexId v : sx) {
        const Rat& last = cur.point_of(v).back();
        if (last < 0) up = false;
        if (last > 0) down = false;
      }
      if (up) upper.insert(sx);
      if (up || down) covered.insert(sx);
    }
    if (covered.size() != b.simplices.size())
      throw std::runtime_error(level_msg("a boundary simplex straddles the equator", i));

    Triangulation& next = chain.levels[i - 1];
    next.ambient = i - 1;
    next.domain = PolytopeDescriptor{PolyKind::CROSS, i - 1, s};
    for (const Simplex& sx : upper) {
      for (VertexId v : sx) {
        if (next.coords.count(v)) continue;
        const Point& p = cur.point_of(v);
        next.coords.emplace(v, Point(p.begin(), p.end() - 1));
      }
      next.simplices.insert(sx);
    }
    next.rebuild_vertex_index();

    // Equator simplices (last coordinate identically zero) must be exactly
    // the boundary of the projected level.
    std::set<Simplex> equator;
    for (const Simplex& sx : upper) {
      bool flat = true;
      for (VertexId v : sx)
        if (cur.point_of(v).back() != 0) flat = false;
      if (flat) equator.insert(sx);
    }
    if (boundary_complex(next).simplices != equator)
      throw std::runtime_error(level_msg("hemisphere overlap is not the lower boundary", i));
  }
  if (!validate_triangulation(chain.levels[0]).ok)
    throw std::runtime_error(level_msg("invalid triangulation", 0));
  return chain;
}

}  // namespace fixcomb

#include "fixcomb/reduction.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fixcomb {

using ordered_json = nlohmann::ordered_json;

const char* shell_config_name(ShellConfig c) {
  switch (c) {
    case ShellConfig::OCT_IN_2OCT: return "oct_in_2oct";
    case ShellConfig::CUBE_IN_2OCT: return "cube_in_2oct";
    case ShellConfig::OCT_IN_2CUBE: return "oct_in_2cube";
  }
  return "?";
}

ShellConfig shell_config_from_string(const std::string& s) {
  for (ShellConfig c : {ShellConfig::OCT_IN_2OCT, ShellConfig::CUBE_IN_2OCT,
                        ShellConfig::OCT_IN_2CUBE})
    if (s == shell_config_name(c)) return c;
  throw std::invalid_argument("unknown shell configuration: " + s);
}

TheoremId inner_theorem_of(ShellConfig c) {
  switch (c) {
    case ShellConfig::OCT_IN_2OCT: return TheoremId::OCT_OCT;
    case ShellConfig::CUBE_IN_2OCT: return TheoremId::CUB_OCT;
    case ShellConfig::OCT_IN_2CUBE: return TheoremId::OCT_OCT;
  }
  throw std::logic_error("unreachable");
}

TheoremId outer_theorem_of(ShellConfig c) {
  switch (c) {
    case ShellConfig::OCT_IN_2OCT: return TheoremId::TUCKER;
    case ShellConfig::CUBE_IN_2OCT: return TheoremId::TUCKER;
    case ShellConfig::OCT_IN_2CUBE: return TheoremId::CUB_OCT;
  }
  throw std::logic_error("unreachable");
}

PolytopeDescriptor outer_domain_of(ShellConfig c, const PolytopeDescriptor& inner) {
  switch (c) {
    case ShellConfig::OCT_IN_2OCT:
      return {PolyKind::CROSS, inner.dim, inner.scale * 2};
    case ShellConfig::CUBE_IN_2OCT:
      // Far enough out that the cube's corners sit strictly inside.
      return {PolyKind::CROSS, inner.dim, inner.scale * 2 * inner.dim};
    case ShellConfig::OCT_IN_2CUBE:
      return {PolyKind::CUBE, inner.dim, inner.scale * 2};
  }
  throw std::logic_error("unreachable");
}

namespace {

Label min_support_label(const Point& p, int n) {
  for (int j = 0; j < n; ++j)
    if (p[j] != 0) {
      Label l(n, 0);
      l[j] = p[j] > 0 ? 1 : -1;
      return l;
    }
  throw std::logic_error("shell vertex at the origin");
}

// Rim simplices all of whose vertices vanish outside the support set and
// respect the given signs on it.
std::vector<Simplex> rim_in_region(const Triangulation& rim, const std::vector<int>& support,
                                   const std::vector<int>& sigma) {
  std::vector<Simplex> out;
  const int n = rim.ambient;
  for (const Simplex& s : rim.simplices) {
    bool inside = true;
    for (VertexId v : s) {
      const Point& p = rim.point_of(v);
      for (int i = 0; inside && i < n; ++i) {
        if (!support[i]) {
          if (p[i] != 0) inside = false;
        } else if (sigma[i] > 0 ? p[i] < 0 : p[i] > 0) {
          inside = false;
        }
      }
      if (!inside) break;
    }
    if (inside) out.push_back(s);
  }
  return out;
}

void shell_oct_in_2oct(Triangulation& star, const Triangulation& rim, const Rat& s) {
  const int n = star.ambient;
  std::function<std::vector<Simplex>(std::vector<int>, const std::vector<int>&)> gen =
      [&](std::vector<int> support, const std::vector<int>& sigma) {
        int j0 = 0;
        while (!support[j0]) ++j0;
        Point apex(n, Rat(0));
        apex[j0] = Rat(2 * sigma[j0]) * s;
        VertexId o = star.add_vertex(apex);
        std::vector<Simplex> cells;
        for (const Simplex& c : rim_in_region(rim, support, sigma)) {
          Simplex cell = c;
          cell.push_back(o);
          cells.push_back(make_simplex(cell));
        }
        std::vector<int> sub = support;
        sub[j0] = 0;
        if (std::count(sub.begin(), sub.end(), 1) > 0)
          for (const Simplex& c : gen(sub, sigma)) {
            Simplex cell = c;
            cell.push_back(o);
            cells.push_back(make_simplex(cell));
          }
        return cells;
      };
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
    for (const Simplex& c : gen(std::vector<int>(n, 1), sigma)) star.add_simplex(c);
  }
}

void shell_cube_in_2oct(Triangulation& star, const Triangulation& rim, const Rat& s) {
  const int n = star.ambient;
  const Rat big = s * 2 * n;
  std::vector<VertexId> apex_of(2 * n);  // facet (i, sig) -> outer apex id
  for (int i = 0; i < n; ++i)
    for (int sig : {1, -1}) {
      Point apex(n, Rat(0));
      apex[i] = Rat(sig) * big;
      apex_of[2 * i + (sig > 0 ? 0 : 1)] = star.add_vertex(apex);
    }
  for (int i = 0; i < n; ++i)
    for (int sig : {1, -1}) {
      VertexId o = apex_of[2 * i + (sig > 0 ? 0 : 1)];
      for (const Simplex& c : rim.simplices) {
        bool on_facet = true;
        for (VertexId v : c)
          if (rim.point_of(v)[i] != Rat(sig) * s) on_facet = false;
        if (!on_facet) continue;
        Simplex cell = c;
        cell.push_back(o);
        star.add_simplex(make_simplex(cell));
      }
    }
  if (n == 2)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        Point corner{Rat(s1) * s, Rat(s2) * s};
        VertexId vc = *star.find_vertex(corner);
        star.add_simplex(make_simplex({apex_of[s1 > 0 ? 0 : 1], apex_of[2 + (s2 > 0 ? 0 : 1)], vc}));
      }
}

void shell_oct_in_2cube(Triangulation& star, const Triangulation& rim, const Rat& s) {
  const int n = star.ambient;
  std::function<std::vector<Simplex>(std::vector<int>, const std::vector<int>&)> gen =
      [&](std::vector<int> support, const std::vector<int>& sigma) {
        Point corner(n, Rat(0));
        for (int i = 0; i < n; ++i)
          if (support[i]) corner[i] = Rat(2 * sigma[i]) * s;
        VertexId o = star.add_vertex(corner);
        std::vector<Simplex> cells;
        for (const Simplex& c : rim_in_region(rim, support, sigma)) {
          Simplex cell = c;
          cell.push_back(o);
          cells.push_back(make_simplex(cell));
        }
        if (std::count(support.begin(), support.end(), 1) > 1)
          for (int j = 0; j < n; ++j) {
            if (!support[j]) continue;
            std::vector<int> sub = support;
            sub[j] = 0;
            for (const Simplex& c : gen(sub, sigma)) {
              Simplex cell = c;
              cell.push_back(o);
              cells.push_back(make_simplex(cell));
            }
          }
        return cells;
      };
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
    for (const Simplex& c : gen(std::vector<int>(n, 1), sigma)) star.add_simplex(c);
  }
}

}  // namespace

Extension extend(ShellConfig c, const Triangulation& t, const LabelFunction& lf) {
  if (!t.domain) throw std::invalid_argument("inner triangulation has no domain descriptor");
  if (c == ShellConfig::CUBE_IN_2OCT && t.domain->dim > 2)
    throw std::invalid_argument("the cube-in-cross shell is only built for dimensions 1 and 2");
  LabelReport inner_ok = validate_label_conditions(inner_theorem_of(c), t, lf);
  if (!inner_ok.ok)
    throw std::invalid_argument("inner instance violates its theorem's conditions");

  Extension ext;
  ext.config = c;
  ext.star.ambient = t.ambient;
  ext.star.domain = outer_domain_of(c, *t.domain);
  for (const auto& [v, p] : t.coords) ext.star.add_vertex(p);
  for (const Simplex& s : t.simplices) ext.star.add_simplex(s);

  Triangulation rim = boundary_complex(t);
  const Rat& s = t.domain->scale;
  switch (c) {
    case ShellConfig::OCT_IN_2OCT: shell_oct_in_2oct(ext.star, rim, s); break;
    case ShellConfig::CUBE_IN_2OCT: shell_cube_in_2oct(ext.star, rim, s); break;
    case ShellConfig::OCT_IN_2CUBE: shell_oct_in_2cube(ext.star, rim, s); break;
  }

  ext.labels.codomain = lf.codomain;
  for (const auto& [v, p] : ext.star.coords) {
    auto it = lf.assignment.find(v);
    if (it != lf.assignment.end() && t.coords.count(v))
      ext.labels.assignment[v] = it->second;
    else
      ext.labels.assignment[v] = min_support_label(p, lf.codomain.m);
  }
  for (const Simplex& sx : ext.star.simplices)
    ext.provenance[sx] =
        t.simplices.count(sx) ? Provenance::INNER : Provenance::SHELL;
  return ext;
}

ExtensionReport verify_extension(const Extension& ext, const Triangulation& t,
                                 const LabelFunction& lf) {
  ExtensionReport rep;
  auto violate = [&rep](std::string v) {
    rep.ok = false;
    rep.violations.push_back(std::move(v));
  };

  for (const auto& [v, p] : t.coords) {
    auto loc = ext.star.coords.find(v);
    if (loc == ext.star.coords.end() || loc->second != p) {
      violate("inner vertex " + std::to_string(v) + " is missing or moved");
      continue;
    }
    if (ext.labels.at(v) != lf.at(v))
      violate("inner vertex " + std::to_string(v) + " changed its label");
  }
  for (const Simplex& sx : t.simplices)
    if (!ext.star.simplices.count(sx)) violate("an inner simplex is missing from the extension");
  for (const Simplex& sx : ext.star.simplices) {
    auto it = ext.provenance.find(sx);
    if (it == ext.provenance.end()) {
      violate("a simplex has no provenance record");
      continue;
    }
    bool inner = t.simplices.count(sx) > 0;
    if (inner != (it->second == Provenance::INNER))
      violate("a simplex is tagged with the wrong provenance");
  }

  ValidationReport geo = validate_triangulation(ext.star);
  if (!geo.ok)
    for (const ValidationIssue& issue : geo.issues)
      violate(std::string("extension geometry: ") + issue_kind_name(issue.kind) + ": " +
              issue.detail);

  Triangulation b = boundary_complex(ext.star);
  if (!check_antipodal_symmetry(b)) {
    violate("extension boundary is not antipodally symmetric");
  } else {
    for (const auto& [v, p] : b.coords) {
      VertexId w = *b.find_vertex(negated(p));
      if (v < w && ext.labels.at(v) != opposite(ext.labels.codomain, ext.labels.at(w)))
        violate("boundary labels at vertex " + std::to_string(v) +
                " and its antipode are not opposite");
    }
  }

  LabelReport outer = validate_label_conditions(outer_theorem_of(ext.config), ext.star, ext.labels);
  for (const LabelViolation& lv : outer.violations)
    violate("outer conditions: vertex " + std::to_string(lv.vertex) + ": " + lv.detail);

  const bool sliced = ext.config != ShellConfig::CUBE_IN_2OCT;
  for (const auto& [sx, origin] : ext.provenance) {
    if (origin != Provenance::SHELL) continue;
    if (sx.size() == 2 && has_complementary_pair(ext.labels.codomain, labelling_of(ext.labels, sx)))
      violate("a shell edge carries an opposite label pair");
    if (sliced)
      for (int i = 0; i < ext.star.ambient; ++i) {
        bool plus = false, minus = false;
        for (VertexId v : sx) {
          const Rat& x = ext.star.point_of(v)[i];
          if (x > 0) plus = true;
          if (x < 0) minus = true;
        }
        if (plus && minus) violate("a shell simplex straddles a coordinate hyperplane");
      }
  }
  return rep;
}

ReductionOutcome reduce_and_find(ShellConfig c, const Triangulation& t, const LabelFunction& lf) {
  ReductionOutcome out{extend(c, t, lf), {}, std::nullopt, false};
  out.report = verify_extension(out.extension, t, lf);
  out.witness = find_witness(outer_theorem_of(c), out.extension.star, out.extension.labels);
  if (out.witness)
    out.witness_inner =
        out.extension.provenance.at(out.witness->simplex) == Provenance::INNER;
  return out;
}

std::string extension_to_json(const Extension& ext) {
  ordered_json j;
  j["config"] = shell_config_name(ext.config);
  j["triangulation"] = ordered_json::parse(triangulation_to_json(ext.star));
  j["labels"] = ordered_json::parse(label_function_to_json(ext.labels));
  j["provenance"] = ordered_json::array();
  for (const auto& [sx, origin] : ext.provenance) {
    ordered_json row;
    row["simplex"] = sx;
    row["origin"] = origin == Provenance::INNER ? "inner" : "shell";
    j["provenance"].push_back(std::move(row));
  }
  return j.dump(2);
}

}  // namespace fixcomb

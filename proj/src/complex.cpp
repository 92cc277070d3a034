#include "fixcomb/complex.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fixcomb {

using ordered_json = nlohmann::ordered_json;

Simplex make_simplex(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("simplex has repeated vertex");
  return ids;
}

VertexId Triangulation::add_vertex(const Point& p) {
  if (static_cast<int>(p.size()) != ambient)
    throw std::invalid_argument("vertex coordinate count does not match ambient dimension");
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  VertexId v = next_id_++;
  coords.emplace(v, p);
  index_.emplace(p, v);
  return v;
}

void Triangulation::add_simplex(const Simplex& s) {
  Simplex canon = make_simplex(s);
  if (canon.empty()) throw std::invalid_argument("empty simplex");
  for (VertexId v : canon)
    if (!coords.count(v)) throw std::invalid_argument("simplex references unknown vertex");
  // Insert every nonempty subset so the set stays face-closed.
  int k = static_cast<int>(canon.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Simplex face;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(canon[i]);
    simplices.insert(std::move(face));
  }
}

std::optional<VertexId> Triangulation::find_vertex(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Point& Triangulation::point_of(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end()) throw std::invalid_argument("unknown vertex id");
  return it->second;
}

std::vector<Point> Triangulation::points_of(const Simplex& s) const {
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (VertexId v : s) pts.push_back(point_of(v));
  return pts;
}

Point Triangulation::barycenter(const Simplex& s) const {
  if (s.empty()) throw std::invalid_argument("empty simplex");
  Point b(ambient, Rat(0));
  for (VertexId v : s) {
    const Point& p = point_of(v);
    for (int i = 0; i < ambient; ++i) b[i] += p[i];
  }
  Rat k(static_cast<int>(s.size()));
  for (auto& x : b) x /= k;
  return b;
}

std::vector<Simplex> Triangulation::maximal_simplices() const {
  std::vector<const Simplex*> by_size(simplices.size());
  {
    size_t i = 0;
    for (const auto& s : simplices) by_size[i++] = &s;
  }
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Simplex* a, const Simplex* b) { return a->size() > b->size(); });
  std::set<Simplex> covered;
  std::vector<Simplex> maximal;
  for (const Simplex* sp : by_size) {
    if (covered.count(*sp)) continue;
    maximal.push_back(*sp);
    int k = static_cast<int>(sp->size());
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      Simplex face;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back((*sp)[i]);
      covered.insert(std::move(face));
    }
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<Simplex> Triangulation::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices)
    if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
  return out;
}

const char* issue_kind_name(IssueKind k) {
  switch (k) {
    case IssueKind::MALFORMED_SIMPLEX: return "malformed_simplex";
    case IssueKind::MISSING_COORDS: return "missing_coords";
    case IssueKind::FACE_CLOSURE: return "face_closure";
    case IssueKind::DEGENERATE: return "degenerate";
    case IssueKind::DIMENSION: return "dimension";
    case IssueKind::OUTSIDE_DOMAIN: return "outside_domain";
    case IssueKind::INTERSECTION: return "intersection";
    case IssueKind::COVERAGE: return "coverage";
  }
  return "?";
}

namespace {

std::string ids_to_string(const Simplex& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

// d! * volume of the domain, the exact total the maximal cells must reach.
Rat scaled_domain_volume(const PolytopeDescriptor& dom) {
  Rat two_s = Rat(2) * dom.scale;
  switch (dom.kind) {
    case PolyKind::CROSS: {
      Rat v(1);
      for (int i = 0; i < dom.dim; ++i) v *= two_s;
      return v;
    }
    case PolyKind::CUBE: {
      Rat v(1);
      for (int i = 1; i <= dom.dim; ++i) v *= two_s * Rat(i);
      return v;
    }
    case PolyKind::SIMPLEX: {
      Rat v(1);
      for (int i = 0; i < dom.dim; ++i) v *= dom.scale;
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

// Simplices of a SIMPLEX domain live in the hyperplane sum(x) = scale; drop
// the last coordinate to measure them with a square determinant. The drop is
// the same affine bijection for every cell, so totals still match.
Rat cell_measure(const std::vector<Point>& pts, const PolytopeDescriptor& dom) {
  if (dom.kind != PolyKind::SIMPLEX) return abs(simplex_det(pts));
  std::vector<Point> proj;
  proj.reserve(pts.size());
  for (const Point& p : pts) proj.emplace_back(p.begin(), p.end() - 1);
  return abs(simplex_det(proj));
}

}  // namespace

ValidationReport validate_triangulation(const Triangulation& t, const ValidationOptions& opts) {
  ValidationReport rep;
  auto issue = [&rep](IssueKind k, std::string detail, std::vector<Simplex> ss = {}) {
    rep.ok = false;
    rep.issues.push_back({k, std::move(detail), std::move(ss)});
  };

  bool structure_ok = true;
  for (const auto& s : t.simplices) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      issue(IssueKind::MALFORMED_SIMPLEX, "simplex is empty, unsorted or repeats a vertex", {s});
      structure_ok = false;
      continue;
    }
    for (VertexId v : s) {
      if (!t.coords.count(v)) {
        issue(IssueKind::MISSING_COORDS, "simplex uses vertex " + std::to_string(v) +
                                             " which has no coordinates", {s});
        structure_ok = false;
      }
    }
  }
  for (const auto& [v, p] : t.coords) {
    if (static_cast<int>(p.size()) != t.ambient) {
      issue(IssueKind::DIMENSION, "vertex " + std::to_string(v) + " has " +
                                      std::to_string(p.size()) + " coordinates in ambient dimension " +
                                      std::to_string(t.ambient));
      structure_ok = false;
    }
  }
  if (!structure_ok) return rep;  // geometric passes assume well-formed input

  for (const auto& s : t.simplices) {
    if (s.size() < 2) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!t.simplices.count(face))
        issue(IssueKind::FACE_CLOSURE, "face " + ids_to_string(face) + " of " + ids_to_string(s) +
                                           " is missing", {s});
    }
  }

  if (t.domain) {
    for (const auto& s : t.simplices) {
      if (s.size() != 1) continue;
      VertexId v = s[0];
      if (point_location(*t.domain, t.point_of(v)) == Location::OUTSIDE)
        issue(IssueKind::OUTSIDE_DOMAIN, "vertex " + std::to_string(v) + " at " +
                                             point_to_string(t.point_of(v)) + " lies outside the domain");
    }
  }

  std::vector<Simplex> maximal = t.maximal_simplices();
  std::vector<bool> degenerate(maximal.size(), false);
  bool dims_ok = true;
  for (size_t i = 0; i < maximal.size(); ++i) {
    std::vector<Point> pts = t.points_of(maximal[i]);
    if (!affinely_independent(pts)) {
      degenerate[i] = true;
      issue(IssueKind::DEGENERATE, "maximal simplex " + ids_to_string(maximal[i]) +
                                       " is affinely dependent", {maximal[i]});
    }
    if (t.domain && static_cast<int>(maximal[i].size()) != t.domain->dim + 1) {
      dims_ok = false;
      issue(IssueKind::DIMENSION, "maximal simplex " + ids_to_string(maximal[i]) + " has dimension " +
                                      std::to_string(maximal[i].size() - 1) + ", domain needs " +
                                      std::to_string(t.domain->dim), {maximal[i]});
    }
  }

  bool run_pairwise = opts.pairwise == PairwiseMode::FORCE ||
                      (opts.pairwise == PairwiseMode::AUTO &&
                       static_cast<int>(maximal.size()) <= opts.pairwise_budget);
  if (run_pairwise) {
    for (size_t i = 0; i < maximal.size(); ++i) {
      if (degenerate[i]) continue;
      std::vector<Point> pi = t.points_of(maximal[i]);
      for (size_t j = i + 1; j < maximal.size(); ++j) {
        if (degenerate[j]) continue;
        if (!simplex_pair_ok(pi, t.points_of(maximal[j])))
          issue(IssueKind::INTERSECTION, "maximal simplices " + ids_to_string(maximal[i]) + " and " +
                                             ids_to_string(maximal[j]) + " do not meet in a common face",
                {maximal[i], maximal[j]});
      }
    }
  }

  if (opts.coverage && t.domain && dims_ok &&
      std::none_of(degenerate.begin(), degenerate.end(), [](bool b) { return b; })) {
    Rat total(0);
    for (const auto& s : maximal) total += cell_measure(t.points_of(s), *t.domain);
    Rat want = scaled_domain_volume(*t.domain);
    if (total != want)
      issue(IssueKind::COVERAGE, "scaled cell volumes sum to " + rat_to_string(total) +
                                     ", domain needs " + rat_to_string(want));
  }

  return rep;
}

Triangulation boundary_complex(const Triangulation& t) {
  if (!t.domain) throw std::invalid_argument("boundary requires a domain");
  std::vector<Facet> fs = facets(*t.domain);

  // Tight facet set per vertex, as indices into fs.
  std::map<VertexId, std::vector<int>> tight;
  for (const auto& [v, p] : t.coords) {
    std::vector<int> ids;
    for (size_t i = 0; i < fs.size(); ++i) {
      Rat lhs(0);
      for (int k = 0; k < t.ambient; ++k) lhs += Rat(fs[i].normal[k]) * p[k];
      if (lhs == fs[i].rhs) ids.push_back(static_cast<int>(i));
    }
    tight.emplace(v, std::move(ids));
  }

  Triangulation b;
  b.ambient = t.ambient;
  b.boundary_of = t.domain;
  for (const auto& s : t.simplices) {
    std::vector<int> common = tight.at(s[0]);
    for (size_t i = 1; i < s.size() && !common.empty(); ++i) {
      std::vector<int> next;
      const std::vector<int>& ti = tight.at(s[i]);
      std::set_intersection(common.begin(), common.end(), ti.begin(), ti.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common.empty()) continue;
    for (VertexId v : s)
      if (!b.coords.count(v)) b.coords.emplace(v, t.point_of(v));
    b.simplices.insert(s);
  }
  b.rebuild_vertex_index();
  return b;
}

void Triangulation::rebuild_vertex_index() {
  index_.clear();
  next_id_ = 0;
  for (const auto& [v, p] : coords) {
    if (index_.count(p)) throw std::invalid_argument("two vertex ids share coordinates");
    index_.emplace(p, v);
    next_id_ = std::max(next_id_, v + 1);
  }
}

bool check_antipodal_symmetry(const Triangulation& tb) {
  const std::optional<PolytopeDescriptor>& ref = tb.boundary_of ? tb.boundary_of : tb.domain;
  if (ref && ref->kind == PolyKind::SIMPLEX)
    throw std::invalid_argument("simplex domains are not origin-symmetric");
  for (const auto& s : tb.simplices) {
    Simplex neg;
    for (VertexId v : s) {
      auto w = tb.find_vertex(negated(tb.point_of(v)));
      if (!w) return false;
      neg.push_back(*w);
    }
    std::sort(neg.begin(), neg.end());
    if (!tb.simplices.count(neg)) return false;
  }
  return true;
}

namespace {

const char* kind_to_string(PolyKind k) { return poly_kind_name(k); }

PolyKind kind_from_string(const std::string& s) {
  if (s == "simplex") return PolyKind::SIMPLEX;
  if (s == "cross") return PolyKind::CROSS;
  if (s == "cube") return PolyKind::CUBE;
  throw std::invalid_argument("unknown polytope kind: " + s);
}

}  // namespace

std::string triangulation_to_json(const Triangulation& t) {
  ordered_json j;
  j["dim"] = t.ambient;
  if (t.domain) {
    j["domain"] = {{"kind", kind_to_string(t.domain->kind)},
                   {"dim", t.domain->dim},
                   {"scale", rat_to_string(t.domain->scale)}};
  } else {
    j["domain"] = nullptr;
  }
  j["vertices"] = ordered_json::array();
  for (const auto& [v, p] : t.coords) {
    ordered_json coords = ordered_json::array();
    for (const Rat& x : p) coords.push_back(rat_to_string(x));
    j["vertices"].push_back({{"id", v}, {"coords", std::move(coords)}});
  }
  j["maximal_simplices"] = ordered_json::array();
  for (const auto& s : t.maximal_simplices()) j["maximal_simplices"].push_back(s);
  return j.dump(2);
}

Triangulation triangulation_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    Triangulation t;
    t.ambient = j.at("dim").get<int>();
    if (t.ambient < 0) throw std::invalid_argument("negative dimension");
    if (!j.at("domain").is_null()) {
      const auto& d = j.at("domain");
      PolytopeDescriptor dom;
      dom.kind = kind_from_string(d.at("kind").get<std::string>());
      dom.dim = d.at("dim").get<int>();
      dom.scale = rat_from_string(d.at("scale").get<std::string>());
      if (dom.dim < 0 || dom.scale <= 0) throw std::invalid_argument("bad domain");
      if (dom.ambient_dim() != t.ambient)
        throw std::invalid_argument("domain does not match ambient dimension");
      t.domain = dom;
    }
    for (const auto& jv : j.at("vertices")) {
      VertexId id = jv.at("id").get<int>();
      if (t.coords.count(id))
        throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
      Point p;
      for (const auto& c : jv.at("coords")) p.push_back(rat_from_string(c.get<std::string>()));
      if (static_cast<int>(p.size()) != t.ambient)
        throw std::invalid_argument("vertex " + std::to_string(id) + " has wrong coordinate count");
      t.coords.emplace(id, std::move(p));
    }
    t.rebuild_vertex_index();
    for (const auto& js : j.at("maximal_simplices")) {
      Simplex s;
      for (const auto& v : js) s.push_back(v.get<int>());
      t.add_simplex(s);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid triangulation JSON: ") + e.what());
  }
}

}  // namespace fixcomb

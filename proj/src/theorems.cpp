#include "fixcomb/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fixcomb {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::SPERNER: return "sperner";
    case TheoremId::OCT_OCT: return "oct_oct";
    case TheoremId::CUB_CUB: return "cub_cub";
    case TheoremId::CUB_OCT: return "cub_oct";
    case TheoremId::OCT_CUB: return "oct_cub";
    case TheoremId::TUCKER: return "tucker";
    case TheoremId::TUCKER_CUB: return "tucker_cub";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& s) {
  for (TheoremId id : {TheoremId::SPERNER, TheoremId::OCT_OCT, TheoremId::CUB_CUB,
                       TheoremId::CUB_OCT, TheoremId::OCT_CUB, TheoremId::TUCKER,
                       TheoremId::TUCKER_CUB})
    if (s == theorem_name(id)) return id;
  throw std::invalid_argument("unknown theorem: " + s);
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::PANCHROMATIC: return "panchromatic";
    case WitnessKind::COMPLEMENTARY_EDGE: return "complementary_edge";
    case WitnessKind::NEUTRAL: return "neutral";
  }
  return "?";
}

WitnessKind witness_kind_of(TheoremId id) {
  switch (id) {
    case TheoremId::SPERNER: return WitnessKind::PANCHROMATIC;
    case TheoremId::OCT_OCT:
    case TheoremId::CUB_OCT:
    case TheoremId::TUCKER: return WitnessKind::COMPLEMENTARY_EDGE;
    case TheoremId::CUB_CUB:
    case TheoremId::OCT_CUB:
    case TheoremId::TUCKER_CUB: return WitnessKind::NEUTRAL;
  }
  throw std::logic_error("unreachable");
}

LabelKind codomain_kind_of(TheoremId id) {
  switch (id) {
    case TheoremId::SPERNER: return LabelKind::SIMPLEX_EXT;
    case TheoremId::OCT_OCT:
    case TheoremId::CUB_OCT:
    case TheoremId::TUCKER: return LabelKind::CROSS_EXT;
    case TheoremId::CUB_CUB:
    case TheoremId::OCT_CUB:
    case TheoremId::TUCKER_CUB: return LabelKind::CUBE_EXT;
  }
  throw std::logic_error("unreachable");
}

bool domain_kind_allowed(TheoremId id, PolyKind kind) {
  switch (id) {
    case TheoremId::SPERNER: return kind == PolyKind::SIMPLEX;
    case TheoremId::OCT_OCT:
    case TheoremId::OCT_CUB: return kind == PolyKind::CROSS;
    case TheoremId::CUB_CUB:
    case TheoremId::CUB_OCT: return kind == PolyKind::CUBE;
    case TheoremId::TUCKER:
    case TheoremId::TUCKER_CUB: return kind == PolyKind::CROSS || kind == PolyKind::CUBE;
  }
  return false;
}

namespace {

bool is_tucker_type(TheoremId id) {
  return id == TheoremId::TUCKER || id == TheoremId::TUCKER_CUB;
}

// Common entry checks; returns the domain descriptor.
const PolytopeDescriptor& check_instance(TheoremId id, const Triangulation& t, int m) {
  if (!t.domain) throw std::invalid_argument("triangulation has no domain descriptor");
  const PolytopeDescriptor& dom = *t.domain;
  if (!domain_kind_allowed(id, dom.kind))
    throw std::invalid_argument(std::string(theorem_name(id)) + " does not apply to a " +
                                poly_kind_name(dom.kind) + " domain");
  if (m < 1) throw std::invalid_argument("label dimension must be positive");
  if (!is_tucker_type(id) && m != dom.dim)
    throw std::invalid_argument(std::string(theorem_name(id)) +
                                " needs label dimension equal to the domain dimension");
  return dom;
}

int sgn(const Rat& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

std::string label_str(const Label& l) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<Label> allowed_labels(TheoremId id, const Triangulation& t, VertexId v, int m) {
  const PolytopeDescriptor& dom = check_instance(id, t, m);
  const Point& x = t.point_of(v);
  const Rat& s = dom.scale;
  std::vector<Label> alphabet = ext_points(codomain_kind_of(id), m);

  switch (id) {
    case TheoremId::TUCKER:
    case TheoremId::TUCKER_CUB:
      return alphabet;  // only the relational antipodality condition applies
    case TheoremId::SPERNER: {
      std::vector<Label> out;
      for (int i = 0; i <= m; ++i)
        if (x[i] != 0) out.push_back(alphabet[i]);
      return out;
    }
    case TheoremId::OCT_OCT: {
      if (point_location(dom, x) != Location::BOUNDARY) return alphabet;
      std::vector<Label> out;
      for (const Label& l : alphabet) {
        int j = 0;
        while (l[j] == 0) ++j;
        if (sgn(x[j]) == l[j]) out.push_back(l);
      }
      return out;
    }
    case TheoremId::CUB_CUB: {
      std::vector<Label> out;
      for (const Label& l : alphabet) {
        bool ok = true;
        for (int i = 0; i < m; ++i)
          if ((x[i] == s || x[i] == -s) && l[i] != sgn(x[i])) ok = false;
        if (ok) out.push_back(l);
      }
      return out;
    }
    case TheoremId::CUB_OCT: {
      std::vector<Label> out;
      for (const Label& l : alphabet) {
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          if (x[i] != s && x[i] != -s) continue;
          if (l[i] == -sgn(x[i])) ok = false;  // l is the forbidden -x_i e_i
        }
        if (ok) out.push_back(l);
      }
      return out;
    }
    case TheoremId::OCT_CUB: {
      std::set<Label> forbidden;
      if (point_location(dom, x) == Location::BOUNDARY)
        for (const Facet& f : active_constraints(dom, x)) {
          Label neg(f.normal.size());
          for (size_t i = 0; i < neg.size(); ++i) neg[i] = -f.normal[i];
          forbidden.insert(std::move(neg));
        }
      std::vector<Label> out;
      for (const Label& l : alphabet)
        if (!forbidden.count(l)) out.push_back(l);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

LabelReport validate_label_conditions(TheoremId id, const Triangulation& t,
                                      const LabelFunction& lf) {
  check_instance(id, t, lf.codomain.m);
  if (lf.codomain.kind != codomain_kind_of(id))
    throw std::invalid_argument(std::string(theorem_name(id)) + " needs " +
                                label_kind_name(codomain_kind_of(id)) + " labels");
  LabelReport rep;
  auto violate = [&rep](VertexId v, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({v, std::move(detail)});
  };

  for (const auto& [v, p] : t.coords) {
    auto it = lf.assignment.find(v);
    if (it == lf.assignment.end()) {
      violate(v, "vertex has no label");
      continue;
    }
    if (!is_valid_label(lf.codomain, it->second))
      violate(v, "label " + label_str(it->second) + " is not an extreme point of the codomain");
  }
  if (!rep.ok) return rep;

  if (!is_tucker_type(id)) {
    for (const auto& [v, p] : t.coords) {
      std::vector<Label> ok_labels = allowed_labels(id, t, v, lf.codomain.m);
      const Label& l = lf.at(v);
      if (std::find(ok_labels.begin(), ok_labels.end(), l) == ok_labels.end())
        violate(v, "label " + label_str(l) + " is forbidden at " + point_to_string(p));
    }
    return rep;
  }

  Triangulation b = boundary_complex(t);
  if (!check_antipodal_symmetry(b)) {
    violate(-1, "boundary complex is not antipodally symmetric");
    return rep;
  }
  LabelSetDescriptor ls = lf.codomain;
  for (const auto& [v, p] : b.coords) {
    VertexId w = *b.find_vertex(negated(p));
    if (v < w && lf.at(v) != opposite(ls, lf.at(w)))
      violate(v, "boundary labels at " + point_to_string(p) + " and its antipode are not opposite");
  }
  return rep;
}

std::optional<Witness> find_witness(TheoremId id, const Triangulation& t,
                                    const LabelFunction& lf) {
  LabelSetDescriptor ls = lf.codomain;
  switch (witness_kind_of(id)) {
    case WitnessKind::PANCHROMATIC: {
      std::set<Label> full;
      for (Label& l : ext_points(ls.kind, ls.m)) full.insert(std::move(l));
      for (const Simplex& s : t.maximal_simplices()) {
        std::set<Label> seen;
        for (VertexId v : s) seen.insert(lf.at(v));
        if (seen == full) return Witness{WitnessKind::PANCHROMATIC, s};
      }
      return std::nullopt;
    }
    case WitnessKind::COMPLEMENTARY_EDGE: {
      for (const Simplex& s : t.simplices) {
        if (s.size() != 2) continue;
        if (lf.at(s[0]) == opposite(ls, lf.at(s[1])))
          return Witness{WitnessKind::COMPLEMENTARY_EDGE, s};
      }
      return std::nullopt;
    }
    case WitnessKind::NEUTRAL: {
      for (const Simplex& s : t.simplices)
        if (is_neutral(ls, labelling_of(lf, s))) return Witness{WitnessKind::NEUTRAL, s};
      return std::nullopt;
    }
  }
  throw std::logic_error("unreachable");
}

CrosscheckReport crosscheck_propositions(const Triangulation& t, const LabelFunction& lf) {
  LabelSetDescriptor ls = lf.codomain;
  PolytopeDescriptor poly;
  if (ls.kind == LabelKind::CROSS_EXT) poly = {PolyKind::CROSS, ls.m, Rat(1)};
  else if (ls.kind == LabelKind::CUBE_EXT) poly = {PolyKind::CUBE, ls.m, Rat(1)};
  else throw std::invalid_argument("cross-check needs cross or cube labels");

  CrosscheckReport rep;
  for (const Simplex& s : t.simplices) {
    Labelling l = labelling_of(lf, s);
    bool predicate = ls.kind == LabelKind::CROSS_EXT ? has_complementary_pair(ls, l)
                                                     : is_neutral(ls, l);
    std::vector<Point> pts;
    pts.reserve(l.size());
    for (const Label& x : l) {
      Point p;
      for (int c : x) p.emplace_back(c);
      pts.push_back(std::move(p));
    }
    bool geometric = hull_meets_interior(pts, poly);
    ++rep.simplices_checked;
    if (predicate != geometric) {
      rep.ok = false;
      rep.disagreements.push_back(s);
    }
  }
  return rep;
}

namespace {

// Assignment slots in draw order: Tucker-type theorems draw one label per
// antipodal boundary pair and mirror it; everything else draws per vertex.
struct Slot {
  VertexId v;
  std::vector<Label> choices;
  VertexId mirror = -1;  // partner vertex for antipodal pairs
};

std::vector<Slot> assignment_slots(TheoremId id, const Triangulation& t, int m) {
  check_instance(id, t, m);
  std::vector<Slot> slots;
  if (!is_tucker_type(id)) {
    for (const auto& [v, p] : t.coords) {
      std::vector<Label> choices = allowed_labels(id, t, v, m);
      if (choices.empty())
        throw std::logic_error("no admissible label at vertex " + std::to_string(v));
      slots.push_back({v, std::move(choices), -1});
    }
    return slots;
  }
  std::vector<Label> alphabet = ext_points(codomain_kind_of(id), m);
  Triangulation b = boundary_complex(t);
  if (!check_antipodal_symmetry(b))
    throw std::invalid_argument("boundary complex is not antipodally symmetric");
  for (const auto& [v, p] : t.coords) {
    if (!b.coords.count(v)) {
      slots.push_back({v, alphabet, -1});
      continue;
    }
    VertexId w = *b.find_vertex(negated(p));
    if (v < w) slots.push_back({v, alphabet, w});
  }
  return slots;
}

}  // namespace

LabelFunction random_labelling(TheoremId id, const Triangulation& t, int m, std::uint64_t seed) {
  LabelFunction lf;
  lf.codomain = {codomain_kind_of(id), m};
  Rng rng(seed);
  for (const Slot& slot : assignment_slots(id, t, m)) {
    const Label& l = slot.choices[rng.below(slot.choices.size())];
    lf.assignment[slot.v] = l;
    if (slot.mirror >= 0) lf.assignment[slot.mirror] = opposite(lf.codomain, l);
  }
  return lf;
}

BigInt count_valid_labellings(TheoremId id, const Triangulation& t, int m) {
  BigInt count = 1;
  for (const Slot& slot : assignment_slots(id, t, m)) count *= BigInt(slot.choices.size());
  return count;
}

std::optional<std::vector<LabelFunction>> enumerate_valid_labellings(
    TheoremId id, const Triangulation& t, int m, std::uint64_t budget) {
  if (count_valid_labellings(id, t, m) > BigInt(budget)) return std::nullopt;
  std::vector<Slot> slots = assignment_slots(id, t, m);
  LabelSetDescriptor ls{codomain_kind_of(id), m};

  std::vector<LabelFunction> out;
  std::vector<size_t> idx(slots.size(), 0);
  while (true) {
    LabelFunction lf;
    lf.codomain = ls;
    for (size_t i = 0; i < slots.size(); ++i) {
      const Label& l = slots[i].choices[idx[i]];
      lf.assignment[slots[i].v] = l;
      if (slots[i].mirror >= 0) lf.assignment[slots[i].mirror] = opposite(ls, l);
    }
    out.push_back(std::move(lf));
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0 && idx[pos] + 1 == slots[pos].choices.size()) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

}  // namespace fixcomb

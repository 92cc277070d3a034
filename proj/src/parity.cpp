#include "fixcomb/parity.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fixcomb {

using ordered_json = nlohmann::ordered_json;

ForbiddenSet ForbiddenSet::complementary() {
  return {"complementary", [](const LabelSetDescriptor& ls, const Labelling& l) {
            return has_complementary_pair(ls, l);
          }};
}

ForbiddenSet ForbiddenSet::neutral() {
  return {"neutral", [](const LabelSetDescriptor& ls, const Labelling& l) {
            return is_neutral(ls, l);
          }};
}

ForbiddenSet ForbiddenSet::none() {
  return {"none", [](const LabelSetDescriptor&, const Labelling&) { return false; }};
}

ForbiddenSet ForbiddenSet::custom(
    std::string name, std::function<bool(const LabelSetDescriptor&, const Labelling&)> fn) {
  return {std::move(name), std::move(fn)};
}

bool verify_strict_symmetry(const LabelSetDescriptor& ls, const ForbiddenSet& f, int n) {
  for (const Label& a : ext_points(ls.kind, ls.m))
    if (f.contains(ls, make_labelling({a}))) return false;
  for (int i = 1; i <= n; ++i)
    for (const Labelling& l : enumerate_labellings(ls, i)) {
      Labelling opp = opposite(ls, l);
      bool in_f = f.contains(ls, l);
      if (in_f != f.contains(ls, opp)) return false;
      if (l == opp && !in_f) return false;  // unpairable labelling left allowed
    }
  return true;
}

int face_degree(const Labelling& l, const std::set<Labelling>& s) {
  int degree = 0;
  for (size_t k = 0; k < l.size(); ++k) {
    Labelling sub;
    sub.reserve(l.size() - 1);
    for (size_t j = 0; j < l.size(); ++j)
      if (j != k) sub.push_back(l[j]);
    if (s.count(sub)) ++degree;
  }
  return degree;
}

std::set<Labelling> next_M(const LabelSetDescriptor& ls, const ForbiddenSet& f, int i,
                           const std::set<Labelling>& m_prev_plus) {
  std::set<Labelling> out;
  for (const Labelling& l : enumerate_labellings(ls, i))
    if (!f.contains(ls, l) && face_degree(l, m_prev_plus) % 2 == 1) out.insert(l);
  return out;
}

bool even_degree_check(const LabelSetDescriptor& ls, const ForbiddenSet& f, int i,
                       const std::set<Labelling>& m_prev_full) {
  for (const Labelling& l : enumerate_labellings(ls, i))
    if (!f.contains(ls, l) && face_degree(l, m_prev_full) % 2 == 1) return false;
  return true;
}

SignRule tucker_rule() {
  return [](const LabelSetDescriptor& ls, const Labelling& l) {
    if (l.empty()) throw std::invalid_argument("sign rule needs a nonempty labelling");
    for (int j = 0; j < ls.label_length(); ++j) {
      bool plus = false, minus = false;
      for (const Label& a : l) {
        if (a[j] > 0) plus = true;
        if (a[j] < 0) minus = true;
      }
      if (plus && minus)
        throw std::invalid_argument("sign rule undefined: coordinate " + std::to_string(j + 1) +
                                    " is occupied with both signs");
      if (plus) return 1;
      if (minus) return -1;
    }
    throw std::invalid_argument("sign rule undefined: no coordinate is occupied");
  };
}

SignRule cubical_rule() {
  return [](const LabelSetDescriptor& ls, const Labelling& l) {
    if (l.empty()) throw std::invalid_argument("sign rule needs a nonempty labelling");
    for (int j = 0; j < ls.label_length(); ++j) {
      bool plus = false, minus = false;
      for (const Label& a : l) {
        if (a[j] > 0) plus = true;
        if (a[j] < 0) minus = true;
      }
      if (plus != minus) return plus ? 1 : -1;
    }
    throw std::invalid_argument("sign rule undefined: the labels agree on no coordinate");
  };
}

namespace {

// All alternating-sign families over k_1 < ... < k_t in [1, m].
std::set<Labelling> alternating_families(int t, int m, int first_sign) {
  std::set<Labelling> out;
  if (t > m) return out;
  std::vector<int> k(t);
  for (int j = 0; j < t; ++j) k[j] = j + 1;
  while (true) {
    std::vector<Label> labels;
    for (int j = 0; j < t; ++j) {
      Label a(m, 0);
      a[k[j] - 1] = (j % 2 == 0) ? first_sign : -first_sign;
      labels.push_back(std::move(a));
    }
    out.insert(make_labelling(labels));
    int pos = t - 1;
    while (pos >= 0 && k[pos] == m - (t - 1 - pos)) --pos;
    if (pos < 0) break;
    ++k[pos];
    for (int j = pos + 1; j < t; ++j) k[j] = k[j - 1] + 1;
  }
  return out;
}

}  // namespace

TuckerClosedForm closed_form_tucker_M(int i, int m) {
  if (i < 1 || m < 1) throw std::invalid_argument("closed form needs i >= 1 and m >= 1");
  TuckerClosedForm cf;
  cf.m_prev_plus = alternating_families(i, m, 1);
  cf.m_prev_minus = alternating_families(i, m, -1);
  cf.m_next = alternating_families(i + 1, m, 1);
  for (const Labelling& l : alternating_families(i + 1, m, -1)) cf.m_next.insert(l);
  return cf;
}

FrameworkResult run_framework(const HemisphereChain& chain, const LabelFunction& lf,
                              const ForbiddenSet& f, const SignRule& rule) {
  if (chain.levels.empty()) throw std::invalid_argument("empty hemisphere chain");
  const Triangulation& top = chain.levels.back();
  const LabelSetDescriptor& ls = lf.codomain;
  if (ls.kind == LabelKind::SIMPLEX_EXT)
    throw std::invalid_argument("the parity walk needs a label set with opposites");
  const int n = chain.top_dim();

  for (const auto& [v, p] : top.coords) {
    auto it = lf.assignment.find(v);
    if (it == lf.assignment.end())
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no label");
    if (!is_valid_label(ls, it->second))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " carries a label outside the alphabet");
  }
  Triangulation b = boundary_complex(top);
  for (const auto& [v, p] : b.coords) {
    auto w = b.find_vertex(negated(p));
    if (!w) throw std::invalid_argument("boundary is not antipodally symmetric");
    if (v < *w && lf.at(v) != opposite(ls, lf.at(*w)))
      throw std::invalid_argument("labels do not negate across boundary antipodes");
  }
  if (!verify_strict_symmetry(ls, f, n))
    throw std::invalid_argument(
        "forbidden set does not leave the labellings strictly symmetric");

  FrameworkResult res;
  for (const Simplex& s : top.simplices)
    if (f.contains(ls, labelling_of(lf, s))) {
      res.completed = false;
      res.forbidden_simplex = s;
      res.all_odd = true;  // vacuous: no parity claim was made
      return res;
    }

  std::set<Labelling> m_cur;
  for (const Label& a : ext_points(ls.kind, ls.m)) m_cur.insert(make_labelling({a}));

  res.completed = true;
  res.all_odd = true;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) {
      std::set<Labelling> plus, minus;
      for (const Labelling& l : m_cur) {
        int r = rule(ls, l);
        if (r != 1 && r != -1) throw std::logic_error("sign rule must return +1 or -1");
        (r == 1 ? plus : minus).insert(l);
      }
      for (const Labelling& l : plus)
        if (!minus.count(opposite(ls, l)))
          throw std::logic_error("sign rule is not antisymmetric on the family");
      if (plus.size() != minus.size())
        throw std::logic_error("sign rule split the family unevenly");
      res.levels[i - 1].plus_size = static_cast<long>(plus.size());
      res.levels[i - 1].minus_size = static_cast<long>(minus.size());
      m_cur = next_M(ls, f, i, plus);
    }
    LevelTrace tr;
    tr.dim = i;
    tr.m_set = m_cur;
    for (const Simplex& s : chain.levels[i].simplices_of_dim(i))
      if (m_cur.count(labelling_of(lf, s))) ++tr.count;
    tr.odd = tr.count % 2 == 1;
    res.all_odd = res.all_odd && tr.odd;
    res.levels.push_back(std::move(tr));
  }
  return res;
}

std::optional<LabelFunction> sample_forbidden_free_labelling(const Triangulation& t,
                                                             const LabelSetDescriptor& ls,
                                                             const ForbiddenSet& f,
                                                             std::uint64_t seed,
                                                             int max_attempts) {
  std::vector<Label> alphabet = ext_points(ls.kind, ls.m);
  Triangulation b = boundary_complex(t);
  std::map<VertexId, VertexId> antipode;
  for (const auto& [v, p] : b.coords) {
    auto w = b.find_vertex(negated(p));
    if (!w) throw std::invalid_argument("boundary is not antipodally symmetric");
    antipode[v] = *w;
  }
  std::map<VertexId, std::vector<const Simplex*>> incident;
  for (const Simplex& s : t.simplices)
    for (VertexId v : s) incident[v].push_back(&s);

  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::map<VertexId, Label> a;
    auto violates = [&](VertexId u) {
      for (const Simplex* s : incident[u]) {
        std::vector<Label> labels;
        bool complete = true;
        for (VertexId x : *s) {
          auto it = a.find(x);
          if (it == a.end()) {
            complete = false;
            break;
          }
          labels.push_back(it->second);
        }
        if (complete && f.contains(ls, make_labelling(labels))) return true;
      }
      return false;
    };

    bool stuck = false;
    for (const auto& [v, p] : t.coords) {
      if (a.count(v)) continue;  // mirrored from its antipode already
      auto pair_it = antipode.find(v);
      VertexId w = pair_it == antipode.end() ? -1 : pair_it->second;
      std::vector<Label> viable;
      for (const Label& c : alphabet) {
        a[v] = c;
        if (w >= 0) a[w] = opposite(ls, c);
        bool bad = violates(v) || (w >= 0 && violates(w));
        a.erase(v);
        if (w >= 0) a.erase(w);
        if (!bad) viable.push_back(c);
      }
      if (viable.empty()) {
        stuck = true;
        break;
      }
      const Label& c = viable[rng.below(viable.size())];
      a[v] = c;
      if (w >= 0) a[w] = opposite(ls, c);
    }
    if (!stuck) {
      LabelFunction lf;
      lf.codomain = ls;
      lf.assignment = std::move(a);
      return lf;
    }
  }
  return std::nullopt;
}

namespace {

ordered_json labelling_json(const Labelling& l) {
  ordered_json arr = ordered_json::array();
  for (const Label& a : l) arr.push_back(a);
  return arr;
}

}  // namespace

std::string framework_result_to_json(const FrameworkResult& r) {
  constexpr size_t kListCap = 10000;
  ordered_json j;
  j["completed"] = r.completed;
  if (r.forbidden_simplex)
    j["forbidden_simplex"] = *r.forbidden_simplex;
  else
    j["forbidden_simplex"] = nullptr;
  j["all_odd"] = r.all_odd;
  j["levels"] = ordered_json::array();
  for (const LevelTrace& tr : r.levels) {
    ordered_json lvl;
    lvl["dim"] = tr.dim;
    lvl["family_size"] = tr.m_set.size();
    lvl["plus_size"] = tr.plus_size;
    lvl["minus_size"] = tr.minus_size;
    lvl["count"] = tr.count;
    lvl["odd"] = tr.odd;
    if (tr.m_set.size() <= kListCap) {
      ordered_json fam = ordered_json::array();
      for (const Labelling& l : tr.m_set) fam.push_back(labelling_json(l));
      lvl["family"] = std::move(fam);
    }
    j["levels"].push_back(std::move(lvl));
  }
  return j.dump(2);
}

}  // namespace fixcomb

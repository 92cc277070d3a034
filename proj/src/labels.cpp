#include "fixcomb/labels.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixcomb {

using ordered_json = nlohmann::ordered_json;

const char* label_kind_name(LabelKind k) {
  switch (k) {
    case LabelKind::SIMPLEX_EXT: return "simplex_ext";
    case LabelKind::CROSS_EXT: return "cross_ext";
    case LabelKind::CUBE_EXT: return "cube_ext";
  }
  return "?";
}

LabelKind label_kind_from_string(const std::string& s) {
  if (s == "simplex_ext") return LabelKind::SIMPLEX_EXT;
  if (s == "cross_ext") return LabelKind::CROSS_EXT;
  if (s == "cube_ext") return LabelKind::CUBE_EXT;
  throw std::invalid_argument("unknown label kind: " + s);
}

std::vector<Label> ext_points(LabelKind kind, int m) {
  if (m < 1) throw std::invalid_argument("label dimension must be positive");
  std::vector<Label> out;
  switch (kind) {
    case LabelKind::SIMPLEX_EXT:
      for (int i = 0; i <= m; ++i) {
        Label l(m + 1, 0);
        l[i] = 1;
        out.push_back(std::move(l));
      }
      break;
    case LabelKind::CROSS_EXT:
      for (int i = 0; i < m; ++i) {
        Label plus(m, 0), minus(m, 0);
        plus[i] = 1;
        minus[i] = -1;
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
      }
      break;
    case LabelKind::CUBE_EXT:
      if (m > 20) throw std::invalid_argument("cube label alphabet too large");
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Label l(m);
        for (int j = 0; j < m; ++j) l[j] = (mask >> (m - 1 - j)) & 1 ? 1 : -1;
        out.push_back(std::move(l));
      }
      break;
  }
  return out;
}

bool is_valid_label(const LabelSetDescriptor& ls, const Label& l) {
  if (static_cast<int>(l.size()) != ls.label_length()) return false;
  switch (ls.kind) {
    case LabelKind::SIMPLEX_EXT: {
      int ones = 0;
      for (int x : l) {
        if (x == 1) ++ones;
        else if (x != 0) return false;
      }
      return ones == 1;
    }
    case LabelKind::CROSS_EXT: {
      int nonzero = 0;
      for (int x : l) {
        if (x == 1 || x == -1) ++nonzero;
        else if (x != 0) return false;
      }
      return nonzero == 1;
    }
    case LabelKind::CUBE_EXT:
      return std::all_of(l.begin(), l.end(), [](int x) { return x == 1 || x == -1; });
  }
  return false;
}

Labelling make_labelling(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

Label opposite(const LabelSetDescriptor& ls, const Label& l) {
  if (ls.kind == LabelKind::SIMPLEX_EXT)
    throw std::invalid_argument("simplex labels have no opposite");
  Label out(l.size());
  std::transform(l.begin(), l.end(), out.begin(), [](int x) { return -x; });
  return out;
}

Labelling opposite(const LabelSetDescriptor& ls, const Labelling& l) {
  std::vector<Label> out;
  out.reserve(l.size());
  for (const Label& x : l) out.push_back(opposite(ls, x));
  return make_labelling(std::move(out));
}

bool has_complementary_pair(const LabelSetDescriptor& ls, const Labelling& l) {
  if (ls.kind != LabelKind::CROSS_EXT)
    throw std::invalid_argument("complementary pairs are defined for cross labels");
  std::set<Label> seen(l.begin(), l.end());
  for (const Label& x : l)
    if (seen.count(opposite(ls, x))) return true;
  return false;
}

bool is_neutral(const LabelSetDescriptor& ls, const Labelling& l) {
  if (ls.kind != LabelKind::CUBE_EXT)
    throw std::invalid_argument("neutrality is defined for cube labels");
  for (int j = 0; j < ls.m; ++j) {
    bool plus = false, minus = false;
    for (const Label& x : l) {
      if (x.at(j) > 0) plus = true;
      if (x.at(j) < 0) minus = true;
    }
    if (!plus || !minus) return false;
  }
  return true;
}

std::set<Labelling> enumerate_labellings(const LabelSetDescriptor& ls, int i) {
  if (i < 0) throw std::invalid_argument("labelling size must be positive");
  std::vector<Label> alphabet = ext_points(ls.kind, ls.m);
  int k = i + 1;
  std::set<Labelling> out;
  // Non-decreasing index tuples = multisets over the alphabet.
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<Label> labels;
    labels.reserve(k);
    for (int t : idx) labels.push_back(alphabet[t]);
    out.insert(make_labelling(std::move(labels)));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(alphabet.size()) - 1) --pos;
    if (pos < 0) break;
    int next = idx[pos] + 1;
    for (int t = pos; t < k; ++t) idx[t] = next;
  }
  return out;
}

bool check_strict_symmetry(const LabelSetDescriptor& ls, const std::set<Labelling>& s) {
  for (const Labelling& l : s) {
    Labelling neg = opposite(ls, l);
    if (neg == l || !s.count(neg)) return false;
  }
  return true;
}

const Label& LabelFunction::at(VertexId v) const {
  auto it = assignment.find(v);
  if (it == assignment.end())
    throw std::invalid_argument("vertex " + std::to_string(v) + " has no label");
  return it->second;
}

Labelling labelling_of(const LabelFunction& lf, const Simplex& s) {
  std::vector<Label> labels;
  labels.reserve(s.size());
  for (VertexId v : s) labels.push_back(lf.at(v));
  return make_labelling(std::move(labels));
}

std::string label_function_to_json(const LabelFunction& lf) {
  ordered_json j;
  j["codomain"] = {{"kind", label_kind_name(lf.codomain.kind)}, {"dim", lf.codomain.m}};
  ordered_json labels = ordered_json::object();
  for (const auto& [v, l] : lf.assignment) labels[std::to_string(v)] = l;
  j["labels"] = std::move(labels);
  return j.dump(2);
}

LabelFunction label_function_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    LabelFunction lf;
    lf.codomain.kind = label_kind_from_string(j.at("codomain").at("kind").get<std::string>());
    lf.codomain.m = j.at("codomain").at("dim").get<int>();
    if (lf.codomain.m < 1) throw std::invalid_argument("label dimension must be positive");
    for (const auto& [key, jl] : j.at("labels").items()) {
      size_t used = 0;
      VertexId v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument("bad vertex id: " + key);
      Label l = jl.get<Label>();
      if (!is_valid_label(lf.codomain, l))
        throw std::invalid_argument("label for vertex " + key + " is not an extreme point");
      if (!lf.assignment.emplace(v, std::move(l)).second)
        throw std::invalid_argument("duplicate vertex id: " + key);
    }
    return lf;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid label JSON: ") + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("vertex id out of range");
  }
}

}  // namespace fixcomb

// Label alphabets are the extreme points of a simplex, cross polytope or
// cube; a labelling is a multiset of labels. The two predicates below decide
// whether a labelled simplex can be pushed away from the domain boundary.
#pragma once

#include "fixcomb/complex.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace fixcomb {

enum class LabelKind { SIMPLEX_EXT, CROSS_EXT, CUBE_EXT };

const char* label_kind_name(LabelKind k);
LabelKind label_kind_from_string(const std::string& s);

using Label = std::vector<int>;
// Canonical form: labels sorted lexicographically, repetitions kept.
using Labelling = std::vector<Label>;

struct LabelSetDescriptor {
  LabelKind kind;
  int m = 1;  // SIMPLEX_EXT has m+1 labels, CROSS_EXT 2m, CUBE_EXT 2^m

  int label_length() const { return kind == LabelKind::SIMPLEX_EXT ? m + 1 : m; }
  bool operator==(const LabelSetDescriptor&) const = default;
};

// Alphabet in pinned order: SIMPLEX_EXT e_1..e_{m+1}; CROSS_EXT paired as
// e_1, -e_1, e_2, -e_2, ...; CUBE_EXT all sign vectors lexicographically.
std::vector<Label> ext_points(LabelKind kind, int m);

bool is_valid_label(const LabelSetDescriptor& ls, const Label& l);

Labelling make_labelling(std::vector<Label> labels);

// Entrywise negation. SIMPLEX_EXT labels have no opposite.
Label opposite(const LabelSetDescriptor& ls, const Label& l);
Labelling opposite(const LabelSetDescriptor& ls, const Labelling& l);

// Some label occurs together with its negation (CROSS_EXT only).
bool has_complementary_pair(const LabelSetDescriptor& ls, const Labelling& l);

// Every coordinate sees both signs among the labels (CUBE_EXT only).
bool is_neutral(const LabelSetDescriptor& ls, const Labelling& l);

// All multisets of size i+1 over the alphabet; |result| = C(|L|+i, i+1).
std::set<Labelling> enumerate_labellings(const LabelSetDescriptor& ls, int i);

// S is closed under negation and no member is its own opposite.
bool check_strict_symmetry(const LabelSetDescriptor& ls, const std::set<Labelling>& s);

struct LabelFunction {
  LabelSetDescriptor codomain;
  std::map<VertexId, Label> assignment;

  const Label& at(VertexId v) const;
};

// The multiset of labels a label function puts on a simplex, canonicalized.
Labelling labelling_of(const LabelFunction& lf, const Simplex& s);

// JSON: {"codomain": {"kind", "dim"}, "labels": {"<vertexId>": [ints]}}.
std::string label_function_to_json(const LabelFunction& lf);
LabelFunction label_function_from_json(const std::string& text);

}  // namespace fixcomb

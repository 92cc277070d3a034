// Fan-style parity bookkeeping over hemisphere-aligned triangulations: walks
// the chain level by level, maintaining the family M^i of labellings that must
// appear an odd number of times, until a forbidden simplex interrupts it.
#pragma once

#include "fixcomb/generators.hpp"
#include "fixcomb/labels.hpp"
#include "fixcomb/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fixcomb {

// A set of forbidden labellings given by a membership predicate. The framework
// needs every L^i minus the set to be strictly symmetric, which the built-in
// sets guarantee: both are negation-closed and absorb self-opposite labellings.
struct ForbiddenSet {
  std::string name;
  std::function<bool(const LabelSetDescriptor&, const Labelling&)> member;

  bool contains(const LabelSetDescriptor& ls, const Labelling& l) const { return member(ls, l); }

  static ForbiddenSet complementary();  // labellings containing an opposite pair
  static ForbiddenSet neutral();        // labellings whose coordinates all see both signs
  static ForbiddenSet none();           // empty set (fails the symmetry check; for tests)
  static ForbiddenSet custom(std::string name,
                             std::function<bool(const LabelSetDescriptor&, const Labelling&)> fn);
};

// Checks that no single label is forbidden and that, for every size up to
// n+1, the allowed labellings are closed under negation with every
// self-opposite labelling forbidden.
bool verify_strict_symmetry(const LabelSetDescriptor& ls, const ForbiddenSet& f, int n);

// Number of positions of l whose removal leaves a member of s.
int face_degree(const Labelling& l, const std::set<Labelling>& s);

// The labellings of size i+1 outside f containing an odd number of faces
// from the + half of the previous family.
std::set<Labelling> next_M(const LabelSetDescriptor& ls, const ForbiddenSet& f, int i,
                           const std::set<Labelling>& m_prev_plus);

// Every allowed labelling of size i+1 must contain an even number of faces
// from the full previous family; this is the engine behind the parity count.
bool even_degree_check(const LabelSetDescriptor& ls, const ForbiddenSet& f, int i,
                       const std::set<Labelling>& m_prev_full);

// Picks the sign of a labelling when splitting a strictly symmetric family
// into opposite halves. Must satisfy rule(-l) == -rule(l); throws
// std::invalid_argument on labellings it is undefined for.
using SignRule = std::function<int(const LabelSetDescriptor&, const Labelling&)>;

// Sign of the lowest coordinate any label occupies (cross labels; undefined
// when both signs of that coordinate appear, i.e. on an opposite pair).
SignRule tucker_rule();
// Sign of the lowest coordinate on which all labels agree (cube labels;
// undefined on neutral labellings, which agree nowhere).
SignRule cubical_rule();

// The families the tucker rule produces have an explicit description:
// strictly alternating sign patterns over increasing coordinates.
struct TuckerClosedForm {
  std::set<Labelling> m_prev_plus;   // size i, first sign +
  std::set<Labelling> m_prev_minus;  // size i, first sign -
  std::set<Labelling> m_next;        // size i+1, both starting signs
};
TuckerClosedForm closed_form_tucker_M(int i, int m);

struct LevelTrace {
  int dim = 0;
  std::set<Labelling> m_set;  // M^dim
  long plus_size = 0;         // halves of M^dim used to build the next level
  long minus_size = 0;        // (zero on the top level, which is never split)
  long count = 0;             // dim-simplices of T^dim labelled from M^dim
  bool odd = false;
};

struct FrameworkResult {
  bool completed = false;                    // no forbidden simplex interrupted the walk
  std::optional<Simplex> forbidden_simplex;  // the interrupting witness otherwise
  std::vector<LevelTrace> levels;
  bool all_odd = false;  // every level produced an odd count (vacuously true on abort)
};

// Runs the parity walk over a hemisphere chain. The label function must cover
// the top triangulation and negate across boundary antipodes; the forbidden
// set must pass verify_strict_symmetry. Scans the top triangulation for a
// forbidden simplex first and aborts with it as witness when one exists.
FrameworkResult run_framework(const HemisphereChain& chain, const LabelFunction& lf,
                              const ForbiddenSet& f, const SignRule& rule);

// Seeded greedy search for a boundary-antipodal labelling of t none of whose
// simplices is forbidden; nullopt when every attempt dead-ends.
std::optional<LabelFunction> sample_forbidden_free_labelling(const Triangulation& t,
                                                             const LabelSetDescriptor& ls,
                                                             const ForbiddenSet& f,
                                                             std::uint64_t seed,
                                                             int max_attempts = 64);

// Serialized trace: per level the family size, its halves, the simplex count
// and its parity; families are listed in full up to 10000 members.
std::string framework_result_to_json(const FrameworkResult& r);

}  // namespace fixcomb

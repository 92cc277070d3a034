// The seven fixed-point theorems: hypothesis validation, witness search, the
// hull-oracle cross-check, and instance sampling/enumeration.
#pragma once

#include "fixcomb/generators.hpp"
#include "fixcomb/labels.hpp"
#include "fixcomb/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fixcomb {

enum class TheoremId {
  SPERNER,      // simplex domain, simplex labels, panchromatic witness
  OCT_OCT,      // cross domain, cross labels, complementary edge
  CUB_CUB,      // cube domain, cube labels, neutral simplex
  CUB_OCT,      // cube domain, cross labels, complementary edge
  OCT_CUB,      // cross domain, cube labels, neutral simplex
  TUCKER,       // ball domain (cross or cube), cross labels, complementary edge
  TUCKER_CUB,   // ball domain, cube labels, neutral simplex
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

enum class WitnessKind { PANCHROMATIC, COMPLEMENTARY_EDGE, NEUTRAL };

const char* witness_kind_name(WitnessKind k);

struct Witness {
  WitnessKind kind;
  Simplex simplex;

  bool operator==(const Witness&) const = default;
};

WitnessKind witness_kind_of(TheoremId id);
LabelKind codomain_kind_of(TheoremId id);
// Domain kinds a theorem's triangulation may live on.
bool domain_kind_allowed(TheoremId id, PolyKind kind);

struct LabelViolation {
  VertexId vertex;
  std::string detail;
};

struct LabelReport {
  bool ok = true;
  std::vector<LabelViolation> violations;
};

// Checks the theorem's boundary/vertex conditions for every vertex of T.
// Throws std::invalid_argument when the domain or codomain does not fit the
// theorem at all; condition failures go into the report.
LabelReport validate_label_conditions(TheoremId id, const Triangulation& t,
                                      const LabelFunction& lf);

// Exhaustive deterministic search: panchromatic over maximal simplices,
// complementary over 1-simplices, neutral over all simplices. nullopt means
// the theorem's guarantee failed (a refutation — callers treat it as such).
std::optional<Witness> find_witness(TheoremId id, const Triangulation& t,
                                    const LabelFunction& lf);

struct CrosscheckReport {
  bool ok = true;
  long simplices_checked = 0;
  std::vector<Simplex> disagreements;
};

// For every simplex, the combinatorial predicate (complementary/neutral) must
// agree with the exact LP test of whether the labels' hull meets the interior
// of the codomain polytope.
CrosscheckReport crosscheck_propositions(const Triangulation& t, const LabelFunction& lf);

// Labels a vertex may take under the theorem's conditions, in alphabet order.
std::vector<Label> allowed_labels(TheoremId id, const Triangulation& t, VertexId v, int m);

// Uniform sample over label functions satisfying the theorem's hypotheses;
// antipodal boundary pairs are assigned via one representative and mirrored.
LabelFunction random_labelling(TheoremId id, const Triangulation& t, int m, std::uint64_t seed);

// Exact number of valid label functions (product of per-vertex choices;
// boundary pairs count once for Tucker-type theorems).
BigInt count_valid_labellings(TheoremId id, const Triangulation& t, int m);

// All valid label functions when their number is within budget, else nullopt.
std::optional<std::vector<LabelFunction>> enumerate_valid_labellings(
    TheoremId id, const Triangulation& t, int m, std::uint64_t budget);

}  // namespace fixcomb

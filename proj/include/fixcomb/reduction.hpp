// Geometric reductions between the edge-witness theorems: an instance on an
// inner domain is extended by a labelled shell triangulation to an instance of
// an outer theorem on a dilated domain, arranged so the outer witness can only
// land on inner simplices.
#pragma once

#include "fixcomb/theorems.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fixcomb {

enum class ShellConfig {
  OCT_IN_2OCT,   // cross instance inside a doubled cross; outer antipodal labels
  CUBE_IN_2OCT,  // cube instance inside a dilated cross (apex pyramids; n <= 2)
  OCT_IN_2CUBE,  // cross instance inside a doubled cube; outer proper labels
};

const char* shell_config_name(ShellConfig c);
ShellConfig shell_config_from_string(const std::string& s);

// The theorem whose instance the shell consumes / the theorem whose guarantee
// is invoked on the extended instance.
TheoremId inner_theorem_of(ShellConfig c);
TheoremId outer_theorem_of(ShellConfig c);

// Dilated domain the extension lives on.
PolytopeDescriptor outer_domain_of(ShellConfig c, const PolytopeDescriptor& inner);

enum class Provenance { INNER, SHELL };

struct Extension {
  ShellConfig config;
  Triangulation star;    // inner triangulation plus the shell cells
  LabelFunction labels;  // inner labels plus sign labels on shell vertices
  std::map<Simplex, Provenance> provenance;  // every simplex of star
};

// Builds the extension. The inner instance must satisfy its theorem's
// conditions (std::invalid_argument otherwise); shell vertices are labelled by
// the sign of their lowest nonzero coordinate.
Extension extend(ShellConfig c, const Triangulation& t, const LabelFunction& lf);

struct ExtensionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Re-derives every property the reduction argument needs: the inner instance
// embeds untouched, the extension is a valid triangulation of the outer
// domain, its boundary is antipodally and label-symmetric, the outer theorem's
// conditions hold, no shell edge carries an opposite label pair (an edge
// between two inner vertices may — such edges belong to the inner instance),
// and (for the coordinate-sliced shells) every shell simplex fits one closed
// orthant.
ExtensionReport verify_extension(const Extension& ext, const Triangulation& t,
                                 const LabelFunction& lf);

struct ReductionOutcome {
  Extension extension;
  ExtensionReport report;
  std::optional<Witness> witness;  // the outer theorem's witness on star
  bool witness_inner = false;      // whether it landed on an inner simplex
};

// extend + verify + outer witness search in one step.
ReductionOutcome reduce_and_find(ShellConfig c, const Triangulation& t, const LabelFunction& lf);

// Serialized extension: config, triangulation, labels, and per-simplex provenance.
std::string extension_to_json(const Extension& ext);

}  // namespace fixcomb

// Simplicial complexes with exact rational vertex coordinates. A
// Triangulation stores a face-closed set of simplices over deduplicated
// vertices, optionally tied to the polytope domain it triangulates.
#pragma once

#include "fixcomb/geometry.hpp"
#include "fixcomb/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fixcomb {

using VertexId = int;
using Simplex = std::vector<VertexId>;  // sorted, distinct ids

Simplex make_simplex(std::vector<VertexId> ids);  // sorts, rejects duplicates

struct Triangulation {
  int ambient = 0;
  std::map<VertexId, Point> coords;
  std::set<Simplex> simplices;  // face-closed
  std::optional<PolytopeDescriptor> domain;
  // Set when this complex is the boundary of a polytope (then domain is empty).
  std::optional<PolytopeDescriptor> boundary_of;

  // Returns the id for the coordinates, creating a vertex on first sight.
  VertexId add_vertex(const Point& p);
  // Adds the simplex and all its faces.
  void add_simplex(const Simplex& s);

  std::optional<VertexId> find_vertex(const Point& p) const;
  const Point& point_of(VertexId v) const;
  std::vector<Point> points_of(const Simplex& s) const;
  Point barycenter(const Simplex& s) const;

  // Simplices that are not a proper face of another simplex, in set order.
  std::vector<Simplex> maximal_simplices() const;
  std::vector<Simplex> simplices_of_dim(int d) const;

  // Call after filling coords directly (not via add_vertex) so that
  // find_vertex and add_vertex keep working. Rejects duplicate coordinates.
  void rebuild_vertex_index();

 private:
  std::map<Point, VertexId> index_;
  VertexId next_id_ = 0;
};

enum class IssueKind {
  MALFORMED_SIMPLEX,
  MISSING_COORDS,
  FACE_CLOSURE,
  DEGENERATE,
  DIMENSION,
  OUTSIDE_DOMAIN,
  INTERSECTION,
  COVERAGE,
};

const char* issue_kind_name(IssueKind k);

struct ValidationIssue {
  IssueKind kind;
  std::string detail;
  std::vector<Simplex> simplices;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

enum class PairwiseMode { AUTO, FORCE, OFF };

struct ValidationOptions {
  PairwiseMode pairwise = PairwiseMode::AUTO;
  // AUTO runs the quadratic proper-intersection pass only up to this many
  // maximal simplices; closure, degeneracy, containment and coverage always run.
  int pairwise_budget = 900;
  bool coverage = true;
};

ValidationReport validate_triangulation(const Triangulation& t,
                                        const ValidationOptions& opts = {});

// Subcomplex of simplices lying in the domain boundary (all vertices share a
// tight facet). Pre: t.domain is set.
Triangulation boundary_complex(const Triangulation& t);

// Is the complex setwise invariant under x -> -x (matched by coordinates)?
// Pre: the complex is the boundary of an origin-symmetric domain; boundary
// complexes of SIMPLEX domains are rejected.
bool check_antipodal_symmetry(const Triangulation& tb);

// JSON: {"dim", "domain", "vertices", "maximal_simplices"}; face closure is
// recomputed on load. Throws std::invalid_argument on malformed input.
std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

}  // namespace fixcomb

// Exact geometry over the three polytope families: the simplex (coordinates
// summing to the scale, all nonnegative), the cross-polytope (l1 ball) and
// the cube (linf ball). Strict-interior and hull queries reduce to exact
// rational LPs, so every answer is a certainty, not an approximation.
#pragma once

#include "fixcomb/rational.hpp"

#include <vector>

namespace fixcomb {

enum class PolyKind { SIMPLEX, CROSS, CUBE };

struct PolytopeDescriptor {
  PolyKind kind = PolyKind::CROSS;
  int dim = 1;      // intrinsic dimension
  Rat scale = 1;

  // SIMPLEX of dimension d lives in d+1 coordinates; the others are full-dim.
  int ambient_dim() const { return kind == PolyKind::SIMPLEX ? dim + 1 : dim; }

  bool operator==(const PolytopeDescriptor&) const = default;
};

const char* poly_kind_name(PolyKind k);

enum class Location { INTERIOR, BOUNDARY, OUTSIDE };

// For SIMPLEX, "interior" means relative interior within the affine hull.
Location point_location(const PolytopeDescriptor& p, const Point& x);

// One facet inequality normal.x <= rhs. Normal entries are in {-1, 0, 1}:
// CROSS facets are the sign vectors, CUBE facets are +-e_i with rhs = scale,
// SIMPLEX facets are -e_i with rhs 0 (coordinate nonnegativity).
struct Facet {
  std::vector<int> normal;
  Rat rhs;
  bool operator==(const Facet&) const = default;
};

// All facets in a deterministic order (sign vectors lexicographic, -1 first).
std::vector<Facet> facets(const PolytopeDescriptor& p);

// Facets tight at x. Pre: x is in the polytope (not OUTSIDE).
std::vector<Facet> active_constraints(const PolytopeDescriptor& p, const Point& x);

// Does conv(pts) intersect the (relative) interior of p? Exact: maximizes a
// shared slack over all facets and tests it for positivity.
bool hull_meets_interior(const std::vector<Point>& pts, const PolytopeDescriptor& p);

// Is x in conv(pts)?
bool hull_contains(const std::vector<Point>& pts, const Point& x);

// Are conv(a) and conv(b) disjoint?
bool hulls_disjoint(const std::vector<Point>& a, const std::vector<Point>& b);

bool affinely_independent(const std::vector<Point>& pts);

// Determinant of the edge matrix (pts[i] - pts[0]); pts must hold d+1 points
// of dimension d. abs(det)/d! is the simplex volume.
Rat simplex_det(const std::vector<Point>& pts);

// Do the two simplices intersect in a common face (possibly empty)? This is
// the pairwise condition that makes a set of simplices a simplicial complex.
// Throws std::invalid_argument if either vertex list is affinely dependent.
bool simplex_pair_ok(const std::vector<Point>& s1, const std::vector<Point>& s2);

}  // namespace fixcomb

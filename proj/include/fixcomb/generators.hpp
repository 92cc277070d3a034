// Deterministic triangulation generators for the three domain families,
// barycentric refinement, and hemisphere-aligned chains over cross-polytope
// triangulations.
#pragma once

#include "fixcomb/complex.hpp"

#include <string>
#include <vector>

namespace fixcomb {

struct GeneratorSpec {
  enum class Base { CROSS_STANDARD, FREUDENTHAL_CUBE, GRID_SIMPLEX };
  Base base = Base::CROSS_STANDARD;
  int n = 1;
  int k = 1;       // grid resolution for cube/simplex bases
  int rounds = 0;  // barycentric refinement rounds applied on top

  bool operator==(const GeneratorSpec&) const = default;
};

// Spec strings: "cross:N", "cube:N:k=K", "simplex:N:k=K",
// "bary(<spec>,rounds=R)" (nesting allowed; rounds accumulate).
GeneratorSpec parse_generator_spec(const std::string& text);
std::string generator_spec_to_string(const GeneratorSpec& spec);

// One simplex per orthant, coned at the origin. Vertex ids: 0 is the center,
// then e_1, -e_1, e_2, -e_2, ... get ids 1..2n.
Triangulation cross_standard(int n, const Rat& scale = Rat(1));

// Kuhn/Freudenthal staircase triangulation of [-scale, scale]^n with k grid
// cells per axis; n! simplices per cell; centrally symmetric.
Triangulation freudenthal_cube(int n, int k, const Rat& scale = Rat(1));

// Edgewise-style subdivision of the standard n-simplex (ambient n+1) into k^n
// cells, via the staircase triangulation of an ordered region of a cube.
Triangulation grid_simplex(int n, int k, const Rat& scale = Rat(1));

// Each maximal d-simplex is replaced by the (d+1)! chains of face
// barycenters. Preserves the domain and any antipodal symmetry.
Triangulation barycentric_subdivide(const Triangulation& t);

Triangulation generate(const GeneratorSpec& spec);

// Same complex with all coordinates (and the domain scale) multiplied.
Triangulation scaled_copy(const Triangulation& t, const Rat& factor);

// levels[i] triangulates the i-ball: levels[n] is the input and levels[i-1]
// is the upper hemisphere of the boundary of levels[i], projected by dropping
// the last coordinate. Vertex ids are shared across all levels.
struct HemisphereChain {
  std::vector<Triangulation> levels;

  int top_dim() const { return static_cast<int>(levels.size()) - 1; }
};

// Builds the chain for a CROSS-domain triangulation whose cells respect the
// coordinate hyperplanes (cross_standard and its barycentric refinements).
// Both chain equalities are verified exactly; violations throw
// std::runtime_error with the failing level.
HemisphereChain hemisphere_chain(const Triangulation& t);

}  // namespace fixcomb

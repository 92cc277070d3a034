// Exact rational linear programming: two-phase primal simplex with Bland's
// rule. Small and deterministic; every query in this project is a handful of
// variables and constraints, so a dense tableau is plenty.
#pragma once

#include "fixcomb/rational.hpp"

#include <vector>

namespace fixcomb::lp {

enum class Sense { LE, EQ };

struct Row {
  std::vector<Rat> a;
  Sense sense;
  Rat b;
};

enum class Status { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct Result {
  Status status;
  Rat value;             // objective at the optimum, valid when OPTIMAL
  std::vector<Rat> x;    // primal solution, valid when OPTIMAL
};

// Maximize c.x subject to the rows and x >= 0.
Result maximize(int nvars, const std::vector<Row>& rows, const std::vector<Rat>& c);

// Feasibility of {rows, x >= 0}.
bool feasible(int nvars, const std::vector<Row>& rows);

}  // namespace fixcomb::lp

#pragma once

#include <vector>

#include "alcove/linalg.hpp"

namespace alcove {

enum class Rel { le, ge, eq, lt, gt };

// Constraint "normal . x  rel  rhs" over free variables, with the plain
// coordinate dot product. Callers pair through the Gram matrix beforehand.
struct LinConstraint {
  RatVec normal;
  Rel rel;
  Rational rhs;
};

struct Feasibility {
  bool feasible = false;
  RatVec witness;  // exactly satisfies every constraint when feasible
};

// Exact feasibility, strict inequalities included. Strictness is decided by a
// gap variable t: each strict row gets slack t, t <= 1, and t is maximized;
// the system is feasible iff the optimum is positive.
Feasibility lp_feasible(const std::vector<LinConstraint>& constraints, std::size_t dim);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  RatVec point;
  Rational value;
};

// maximize objective . x subject to non-strict constraints; exact two-phase
// simplex with Bland's rule (termination guaranteed, sizes here are tiny).
LpResult lp_maximize(const RatVec& objective,
                     const std::vector<LinConstraint>& constraints, std::size_t dim);

}  // namespace alcove

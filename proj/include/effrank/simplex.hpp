#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace effrank {

enum class Relation { LE, GE, EQ };
enum class VarBound { NonNegative, Free };

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::LE;
  double rhs = 0.0;
};

// minimize objective . z subject to the listed constraints and
// per-variable bounds.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarBound> bounds;  // one entry per variable
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective_value = 0.0;        // defined iff Optimal
  std::vector<double> variables;       // defined iff Optimal
};

struct SimplexOptions {
  double feas_tol = 1e-9;   // feasibility tolerance after row scaling
  double pivot_tol = 1e-10; // minimum accepted pivot magnitude
  int degenerate_limit = 64;       // degenerate pivots before Bland's rule
  int max_iterations = 20000;
};

// Dense two-phase primal simplex. Dantzig pricing with a switch to
// Bland's rule after `degenerate_limit` consecutive degenerate pivots;
// all tie-breaks by lowest index, so the pivot sequence is deterministic.
// Free variables are split into positive and negative parts.
// Throws Error(NumericalFailure) when the iteration guard trips.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

// Plain-text "minimize / subject to" dump for bug reports.
std::string format_lp(const LinearProgram& lp);

}  // namespace effrank

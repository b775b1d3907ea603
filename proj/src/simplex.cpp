#include "effrank/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "effrank/errors.hpp"

namespace effrank {

namespace {

// Full-tableau state shared by both phases.
struct Tableau {
  std::vector<std::vector<double>> rows;  // m x ncols coefficient rows
  std::vector<double> rhs;                // m, kept >= 0
  std::vector<double> cost;               // reduced-cost row, ncols
  double neg_objective = 0.0;             // negated objective value
  std::vector<int> basis;                 // m, column index of basic var
  std::vector<bool> allowed;              // columns eligible to enter

  void pivot(int row, int col) {
    const double p = rows[row][col];
    for (double& v : rows[row]) v /= p;
    rhs[row] /= p;
    rows[row][col] = 1.0;  // kill roundoff on the pivot itself
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const double f = rows[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        rows[i][j] -= f * rows[row][j];
      rows[i][col] = 0.0;
      rhs[i] -= f * rhs[row];
      if (rhs[i] < 0.0 && rhs[i] > -1e-12) rhs[i] = 0.0;
    }
    const double f = cost[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * rows[row][j];
      cost[col] = 0.0;
      neg_objective -= f * rhs[row];
    }
    basis[row] = col;
  }
};

enum class PhaseOutcome { Optimal, Unbounded };

PhaseOutcome run_phase(Tableau& t, const SimplexOptions& opt, int& iterations) {
  int degenerate_run = 0;
  bool bland = false;
  const int ncols = static_cast<int>(t.cost.size());
  while (true) {
    if (++iterations > opt.max_iterations)
      throw Error(ErrorCode::NumericalFailure, "simplex iteration limit reached");

    // entering column
    int enter = -1;
    double best = -opt.feas_tol;
    for (int j = 0; j < ncols; ++j) {
      if (!t.allowed[j]) continue;
      if (t.cost[j] < best) {
        if (bland) {  // first eligible index
          enter = j;
          break;
        }
        best = t.cost[j];
        enter = j;
      }
    }
    if (enter < 0) return PhaseOutcome::Optimal;

    // ratio test, ties by lowest basis index
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double a = t.rows[i][enter];
      if (a <= opt.pivot_tol) continue;
      const double ratio = t.rhs[i] / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           (leave < 0 || t.basis[i] < t.basis[leave]))) {
        best_ratio = ratio;
        leave = static_cast<int>(i);
      }
    }
    if (leave < 0) return PhaseOutcome::Unbounded;

    if (best_ratio <= opt.feas_tol) {
      if (++degenerate_run > opt.degenerate_limit) bland = true;
    } else {
      degenerate_run = 0;
    }

    t.pivot(leave, enter);

    for (const auto& row : t.rows)
      for (double v : row)
        if (!std::isfinite(v) || std::fabs(v) > 1e100)
          throw Error(ErrorCode::NumericalFailure, "tableau entry overflow");
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opt) {
  const std::size_t nvars = lp.objective.size();
  if (lp.bounds.size() != nvars)
    throw Error(ErrorCode::DimensionMismatch, "bounds size != objective size");
  for (const auto& c : lp.constraints)
    if (c.coefficients.size() != nvars)
      throw Error(ErrorCode::DimensionMismatch, "constraint width != objective size");

  // Column layout: NonNegative vars get one column, Free vars a +/- pair.
  std::vector<int> pos_col(nvars), neg_col(nvars, -1);
  int ncols = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    pos_col[v] = ncols++;
    if (lp.bounds[v] == VarBound::Free) neg_col[v] = ncols++;
  }
  const int nstruct = ncols;
  const std::size_t m = lp.constraints.size();

  // slack/surplus columns for inequality rows
  std::vector<int> slack_col(m, -1);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].relation != Relation::EQ) slack_col[i] = ncols++;
  const int nslack_end = ncols;
  // one artificial per row
  std::vector<int> art_col(m);
  for (std::size_t i = 0; i < m; ++i) art_col[i] = ncols++;

  Tableau t;
  t.rows.assign(m, std::vector<double>(ncols, 0.0));
  t.rhs.assign(m, 0.0);
  t.basis.assign(m, 0);
  t.allowed.assign(ncols, true);

  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    // row scaling by the largest coefficient magnitude
    double scale = std::fabs(c.rhs);
    for (double a : c.coefficients) scale = std::max(scale, std::fabs(a));
    if (scale < 1e-300) scale = 1.0;

    auto& row = t.rows[i];
    for (std::size_t v = 0; v < nvars; ++v) {
      const double a = c.coefficients[v] / scale;
      row[pos_col[v]] = a;
      if (neg_col[v] >= 0) row[neg_col[v]] = -a;
    }
    double rhs = c.rhs / scale;
    if (c.relation == Relation::LE) row[slack_col[i]] = 1.0;
    if (c.relation == Relation::GE) row[slack_col[i]] = -1.0;
    if (rhs < 0.0) {
      for (double& v : row) v = -v;
      rhs = -rhs;
    }
    t.rhs[i] = rhs;
    row[art_col[i]] = 1.0;
    t.basis[i] = art_col[i];
  }

  // Phase 1: minimize the sum of artificials. With the artificial basis,
  // the reduced cost of column j is -sum of its rows.
  t.cost.assign(ncols, 0.0);
  t.neg_objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 0; j < nslack_end; ++j) t.cost[j] -= t.rows[i][j];
    t.neg_objective -= t.rhs[i];
  }
  int iterations = 0;
  run_phase(t, opt, iterations);  // phase 1 cannot be unbounded
  if (-t.neg_objective > opt.feas_tol * std::max<double>(1.0, m))
    return {LpStatus::Infeasible, 0.0, {}};

  // Drive any remaining artificials out of the basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < art_col[0]) continue;
    int col = -1;
    for (int j = 0; j < nslack_end; ++j) {
      if (std::fabs(t.rows[i][j]) > opt.pivot_tol) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(static_cast<int>(i), col);
    }
    // else: redundant row; the artificial stays basic at value ~0 and its
    // column is barred from re-entering below.
  }
  for (int j = art_col[0]; j < ncols; ++j) t.allowed[j] = false;

  // Phase 2: real objective.
  t.cost.assign(ncols, 0.0);
  for (std::size_t v = 0; v < nvars; ++v) {
    t.cost[pos_col[v]] = lp.objective[v];
    if (neg_col[v] >= 0) t.cost[neg_col[v]] = -lp.objective[v];
  }
  t.neg_objective = 0.0;
  // price out the current basis
  for (std::size_t i = 0; i < m; ++i) {
    const double cb = t.cost[t.basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j < ncols; ++j) t.cost[j] -= cb * t.rows[i][j];
    t.cost[t.basis[i]] = 0.0;
    t.neg_objective -= cb * t.rhs[i];
  }
  if (run_phase(t, opt, iterations) == PhaseOutcome::Unbounded)
    return {LpStatus::Unbounded, 0.0, {}};

  std::vector<double> columns(ncols, 0.0);
  for (std::size_t i = 0; i < m; ++i) columns[t.basis[i]] = t.rhs[i];
  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.variables.resize(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    solution.variables[v] = columns[pos_col[v]];
    if (neg_col[v] >= 0) solution.variables[v] -= columns[neg_col[v]];
  }
  double obj = 0.0;
  for (std::size_t v = 0; v < nvars; ++v)
    obj += lp.objective[v] * solution.variables[v];
  solution.objective_value = obj;
  return solution;
}

std::string format_lp(const LinearProgram& lp) {
  std::ostringstream out;
  out.precision(17);
  auto term = [&](double a, std::size_t v, bool first) {
    if (!first && a >= 0.0) out << " + ";
    if (!first && a < 0.0) {
      out << " - ";
      a = -a;
    }
    out << a << "*z" << v;
  };
  out << "minimize ";
  for (std::size_t v = 0; v < lp.objective.size(); ++v)
    term(lp.objective[v], v, v == 0);
  out << "\nsubject to\n";
  for (const auto& c : lp.constraints) {
    out << "  ";
    for (std::size_t v = 0; v < c.coefficients.size(); ++v)
      term(c.coefficients[v], v, v == 0);
    switch (c.relation) {
      case Relation::LE: out << " <= "; break;
      case Relation::GE: out << " >= "; break;
      case Relation::EQ: out << " == "; break;
    }
    out << c.rhs << '\n';
  }
  for (std::size_t v = 0; v < lp.bounds.size(); ++v)
    out << "  z" << v
        << (lp.bounds[v] == VarBound::NonNegative ? " >= 0" : " free") << '\n';
  return out.str();
}

}  // namespace effrank

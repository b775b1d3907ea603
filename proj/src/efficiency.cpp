#include "effrank/efficiency.hpp"

#include <cmath>

#include "effrank/errors.hpp"

namespace effrank {

Point summary_point(const std::vector<MetricSpec>& metrics,
                    const SetupSummary& summary) {
  Point p;
  p.setup = summary.setup;
  for (const auto& m : metrics) {
    auto it = summary.mean.find(m.name);
    if (it == summary.mean.end())
      throw Error(ErrorCode::DimensionMismatch,
                  "summary for '" + summary.setup + "' lacks metric '" + m.name + "'");
    (m.direction == Direction::Input ? p.inputs : p.outputs).push_back(it->second);
  }
  return p;
}

LinearProgram build_dea_lp(const std::vector<Point>& points, std::size_t target,
                           FrontierForm form) {
  if (points.size() < 2)
    throw Error(ErrorCode::DimensionMismatch, "need at least 2 points");
  if (target >= points.size())
    throw Error(ErrorCode::DimensionMismatch, "target index out of range");
  const std::size_t n = points.size();
  const std::size_t num_inputs = points[0].inputs.size();
  const std::size_t num_outputs = points[0].outputs.size();
  if (num_inputs == 0 || num_outputs == 0)
    throw Error(ErrorCode::DimensionMismatch, "need >= 1 input and >= 1 output");
  for (const auto& p : points)
    if (p.inputs.size() != num_inputs || p.outputs.size() != num_outputs)
      throw Error(ErrorCode::DimensionMismatch,
                  "point '" + p.setup + "' has mismatched dimensions");

  // variables: z0 = theta (free), z1..zn = lambda (nonneg)
  LinearProgram lp;
  lp.objective.assign(n + 1, 0.0);
  lp.objective[0] = 1.0;
  lp.bounds.assign(n + 1, VarBound::NonNegative);
  lp.bounds[0] = VarBound::Free;

  for (std::size_t l = 0; l < num_inputs; ++l) {
    LinearConstraint c;
    c.coefficients.assign(n + 1, 0.0);
    c.coefficients[0] = -points[target].inputs[l];
    for (std::size_t k = 0; k < n; ++k)
      c.coefficients[k + 1] = points[k].inputs[l];
    c.relation = Relation::LE;
    c.rhs = 0.0;
    lp.constraints.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < num_outputs; ++j) {
    LinearConstraint c;
    c.coefficients.assign(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      c.coefficients[k + 1] = points[k].outputs[j];
    c.relation = Relation::GE;
    c.rhs = points[target].outputs[j];
    lp.constraints.push_back(std::move(c));
  }
  if (form == FrontierForm::Convex) {
    LinearConstraint c;
    c.coefficients.assign(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) c.coefficients[k + 1] = 1.0;
    c.relation = Relation::EQ;
    c.rhs = 1.0;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

std::vector<EfficiencyResult> efficiency_scores(const std::vector<Point>& points,
                                                FrontierForm form) {
  std::vector<EfficiencyResult> results;
  if (points.size() == 1) {
    EfficiencyResult r;
    r.setup = points[0].setup;
    r.theta = 1.0;
    r.peer_weights[points[0].setup] = 1.0;
    r.form = form;
    r.status = LpStatus::Optimal;
    results.push_back(std::move(r));
    return results;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto lp = build_dea_lp(points, i, form);
    LpSolution solution;
    try {
      solution = solve_lp(lp);
    } catch (const Error& e) {
      throw Error(ErrorCode::SolverFailure,
                  "setup '" + points[i].setup + "': " + e.what());
    }
    if (solution.status != LpStatus::Optimal)
      throw Error(ErrorCode::SolverFailure,
                  "setup '" + points[i].setup + "': LP not optimal");
    EfficiencyResult r;
    r.setup = points[i].setup;
    r.theta = solution.objective_value;
    for (std::size_t k = 0; k < points.size(); ++k) {
      const double w = solution.variables[k + 1];
      if (w > 0.0) r.peer_weights[points[k].setup] = w;
    }
    r.form = form;
    r.status = solution.status;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<EfficiencyResult> efficiency_scores(const SummaryTable& table,
                                                FrontierForm form) {
  std::vector<Point> points;
  points.reserve(table.setups.size());
  for (const auto& s : table.setups) points.push_back(summary_point(table.metrics, s));
  return efficiency_scores(points, form);
}

}  // namespace effrank

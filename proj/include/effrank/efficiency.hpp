#pragma once

#include <map>
#include <string>
#include <vector>

#include "effrank/dataset.hpp"
#include "effrank/pareto.hpp"
#include "effrank/simplex.hpp"

namespace effrank {

// Convex keeps the sum-to-one constraint on the peer weights (variable
// returns to scale); Affine drops it (constant returns to scale).
enum class FrontierForm { Convex, Affine };

struct EfficiencyResult {
  std::string setup;
  double theta = 1.0;
  std::map<std::string, double> peer_weights;
  FrontierForm form = FrontierForm::Convex;
  LpStatus status = LpStatus::Optimal;
};

// Input-oriented envelopment LP for one target setup. Variables are
// (theta, lambda_1 .. lambda_n); minimize theta subject to
//   sum_k lambda_k x_kl <= theta x_il   for each input dimension l
//   sum_k lambda_k y_kj >= y_ij         for each output dimension j
//   lambda >= 0, theta free, and sum lambda = 1 iff Convex.
LinearProgram build_dea_lp(const std::vector<Point>& points, std::size_t target,
                           FrontierForm form);

std::vector<EfficiencyResult> efficiency_scores(const std::vector<Point>& points,
                                                FrontierForm form);

// Convenience overload: points are the summary means.
std::vector<EfficiencyResult> efficiency_scores(const SummaryTable& table,
                                                FrontierForm form);

// Splits a summary's per-metric values into (inputs, outputs) vectors
// ordered by the metric declaration order.
Point summary_point(const std::vector<MetricSpec>& metrics,
                    const SetupSummary& summary);

}  // namespace effrank

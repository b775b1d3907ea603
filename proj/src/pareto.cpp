#include "effrank/pareto.hpp"

#include "effrank/errors.hpp"

namespace effrank {

bool dominates(const Point& a, const Point& b) {
  if (a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size())
    throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  bool strict = false;
  for (std::size_t l = 0; l < a.inputs.size(); ++l) {
    if (a.inputs[l] > b.inputs[l]) return false;
    if (a.inputs[l] < b.inputs[l]) strict = true;
  }
  for (std::size_t j = 0; j < a.outputs.size(); ++j) {
    if (a.outputs[j] < b.outputs[j]) return false;
    if (a.outputs[j] > b.outputs[j]) strict = true;
  }
  return strict;
}

std::set<std::string> pareto_frontier(const std::vector<Point>& points) {
  if (points.empty())
    throw Error(ErrorCode::EmptySample, "no points");
  std::set<std::string> frontier;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < points.size() && !dominated; ++k)
      if (k != i && dominates(points[k], points[i])) dominated = true;
    if (!dominated) frontier.insert(points[i].setup);
  }
  return frontier;
}

}  // namespace effrank

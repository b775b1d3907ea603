#pragma once

#include <set>
#include <string>
#include <vector>

namespace effrank {

// A setup's coordinates: inputs are minimized, outputs maximized.
struct Point {
  std::string setup;
  std::vector<double> inputs;
  std::vector<double> outputs;
};

// Strong Pareto dominance: a is at least as good as b everywhere and
// strictly better somewhere.
bool dominates(const Point& a, const Point& b);

// Setup names of all non-dominated points. Duplicates of a frontier
// point are all included.
std::set<std::string> pareto_frontier(const std::vector<Point>& points);

}  // namespace effrank

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "effrank/bootstrap.hpp"
#include "effrank/efficiency.hpp"

namespace effrank {

enum class DominanceRelation { FirstDominates, SecondDominates, Incomparable };

struct DominanceGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;          // winner -> loser
  std::vector<std::pair<std::string, std::string>> reduced_edges;  // transitive reduction
};

// Empirical first-order stochastic dominance on paired order statistics:
// after sorting both sample vectors, a dominates b when a_(r) >= b_(r) -
// tolerance at every rank and strictly exceeds b_(r) + tolerance at some
// rank. Antisymmetric, so the induced graph is acyclic.
DominanceRelation stochastic_dominance(const BootstrapDistribution& a,
                                       const BootstrapDistribution& b,
                                       double tolerance);

DominanceGraph dominance_graph(const std::vector<BootstrapDistribution>& dists,
                               double tolerance);

struct RankEntry {
  std::string setup;
  double theta = 1.0;          // deterministic efficiency
  double median = 1.0;         // median of the bootstrap samples
  BoxplotStats stats;
  bool on_frontier = false;
  std::vector<std::string> dominates;     // setups this one dominates
  std::vector<std::string> dominated_by;  // setups dominating this one
};

// One entry per setup, ordered by median descending, ties by name.
std::vector<RankEntry> rank_report(const std::vector<EfficiencyResult>& results,
                                   const std::vector<BootstrapDistribution>& dists,
                                   const DominanceGraph& graph,
                                   const std::set<std::string>& frontier);

}  // namespace effrank

#include "effrank/ranking.hpp"

#include <algorithm>
#include <map>

#include "effrank/errors.hpp"

namespace effrank {

DominanceRelation stochastic_dominance(const BootstrapDistribution& a,
                                       const BootstrapDistribution& b,
                                       double tolerance) {
  if (a.samples.size() != b.samples.size())
    throw Error(ErrorCode::UnequalSampleCounts,
                "'" + a.setup + "' has " + std::to_string(a.samples.size()) +
                    " samples, '" + b.setup + "' has " +
                    std::to_string(b.samples.size()));
  std::vector<double> sa = a.samples;
  std::vector<double> sb = b.samples;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  bool a_never_below = true, b_never_below = true;
  bool a_strict = false, b_strict = false;
  for (std::size_t r = 0; r < sa.size(); ++r) {
    if (sa[r] < sb[r] - tolerance) a_never_below = false;
    if (sb[r] < sa[r] - tolerance) b_never_below = false;
    if (sa[r] > sb[r] + tolerance) a_strict = true;
    if (sb[r] > sa[r] + tolerance) b_strict = true;
  }
  if (a_never_below && a_strict) return DominanceRelation::FirstDominates;
  if (b_never_below && b_strict) return DominanceRelation::SecondDominates;
  return DominanceRelation::Incomparable;
}

namespace {

using Edge = std::pair<std::string, std::string>;

// reachability over adjacency lists, iterative DFS
bool reachable(const std::map<std::string, std::vector<std::string>>& adj,
               const std::string& from, const std::string& to) {
  std::vector<const std::string*> stack{&from};
  std::set<std::string> seen;
  while (!stack.empty()) {
    const std::string* u = stack.back();
    stack.pop_back();
    if (*u == to) return true;
    if (!seen.insert(*u).second) continue;
    auto it = adj.find(*u);
    if (it == adj.end()) continue;
    for (const auto& v : it->second) stack.push_back(&v);
  }
  return false;
}

std::vector<Edge> transitive_reduction(const std::vector<std::string>& nodes,
                                       const std::vector<Edge>& edges) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [u, v] : edges) adj[u].push_back(v);
  std::vector<Edge> reduced;
  for (const auto& [u, v] : edges) {
    // u -> v is redundant when v is reachable from u through some other
    // direct successor of u
    bool redundant = false;
    for (const auto& w : adj[u]) {
      if (w == v) continue;
      if (reachable(adj, w, v)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back({u, v});
  }
  return reduced;
}

}  // namespace

DominanceGraph dominance_graph(const std::vector<BootstrapDistribution>& dists,
                               double tolerance) {
  DominanceGraph graph;
  for (const auto& d : dists) graph.nodes.push_back(d.setup);
  for (std::size_t i = 0; i < dists.size(); ++i) {
    for (std::size_t j = i + 1; j < dists.size(); ++j) {
      switch (stochastic_dominance(dists[i], dists[j], tolerance)) {
        case DominanceRelation::FirstDominates:
          graph.edges.push_back({dists[i].setup, dists[j].setup});
          break;
        case DominanceRelation::SecondDominates:
          graph.edges.push_back({dists[j].setup, dists[i].setup});
          break;
        case DominanceRelation::Incomparable:
          break;
      }
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.reduced_edges = transitive_reduction(graph.nodes, graph.edges);
  std::sort(graph.reduced_edges.begin(), graph.reduced_edges.end());
  return graph;
}

std::vector<RankEntry> rank_report(const std::vector<EfficiencyResult>& results,
                                   const std::vector<BootstrapDistribution>& dists,
                                   const DominanceGraph& graph,
                                   const std::set<std::string>& frontier) {
  if (results.size() != dists.size())
    throw Error(ErrorCode::InconsistentSetups,
                "efficiency results and distributions differ in size");
  std::map<std::string, const BootstrapDistribution*> by_name;
  for (const auto& d : dists) by_name[d.setup] = &d;

  std::vector<RankEntry> entries;
  for (const auto& r : results) {
    auto it = by_name.find(r.setup);
    if (it == by_name.end())
      throw Error(ErrorCode::InconsistentSetups,
                  "no distribution for setup '" + r.setup + "'");
    RankEntry e;
    e.setup = r.setup;
    e.theta = r.theta;
    e.stats = it->second->stats;
    e.median = e.stats.median;
    e.on_frontier = frontier.count(r.setup) > 0;
    for (const auto& [winner, loser] : graph.edges) {
      if (winner == r.setup) e.dominates.push_back(loser);
      if (loser == r.setup) e.dominated_by.push_back(winner);
    }
    std::sort(e.dominates.begin(), e.dominates.end());
    std::sort(e.dominated_by.begin(), e.dominated_by.end());
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.median != b.median) return a.median > b.median;
    return a.setup < b.setup;
  });
  return entries;
}

}  // namespace effrank

#pragma once

#include <string>
#include <vector>

#include "effrank/bootstrap.hpp"
#include "effrank/efficiency.hpp"
#include "effrank/ranking.hpp"

namespace effrank {

struct ReportOptions {
  bool scale_percent = true;  // render theta * 100 (table convention)
  bool raw_samples = false;   // include per-replicate samples in bootstrap output
};

// Shortest-round-trip decimal rendering (17 significant digits max).
std::string format_number(double value);

// DOT digraph over the reduced edges; quoted identifiers, nodes and
// edges in lexicographic order.
std::string render_dot(const DominanceGraph& graph);

std::string efficiency_csv(const std::vector<EfficiencyResult>& results,
                           const ReportOptions& opts);
std::string efficiency_json(const std::vector<EfficiencyResult>& results,
                            const ReportOptions& opts);

std::string frontier_csv(const std::vector<Point>& points,
                         const std::set<std::string>& frontier);
std::string frontier_json(const std::vector<Point>& points,
                          const std::set<std::string>& frontier);

std::string bootstrap_csv(const std::vector<BootstrapDistribution>& dists,
                          const ReportOptions& opts);
std::string bootstrap_json(const std::vector<BootstrapDistribution>& dists,
                           const ReportOptions& opts);

std::string rank_csv(const std::vector<RankEntry>& entries,
                     const ReportOptions& opts);
// Schema: {config, setups: [{name, theta, frontier, stats, dominates,
// dominated_by}]}.
std::string rank_json(const std::vector<RankEntry>& entries,
                      const ReportOptions& opts, const std::string& form,
                      int replicates, std::uint64_t seed, double tolerance);

}  // namespace effrank

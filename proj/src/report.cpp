#include "effrank/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace effrank {

using nlohmann::ordered_json;

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

double scaled(double theta, const ReportOptions& opts) {
  return opts.scale_percent ? theta * 100.0 : theta;
}

ordered_json stats_json(const BoxplotStats& s, const ReportOptions& opts) {
  ordered_json j;
  j["min"] = scaled(s.min, opts);
  j["whisker_low"] = scaled(s.whisker_low, opts);
  j["q1"] = scaled(s.q1, opts);
  j["median"] = scaled(s.median, opts);
  j["q3"] = scaled(s.q3, opts);
  j["whisker_high"] = scaled(s.whisker_high, opts);
  j["max"] = scaled(s.max, opts);
  return j;
}

}  // namespace

std::string render_dot(const DominanceGraph& graph) {
  std::vector<std::string> nodes = graph.nodes;
  std::sort(nodes.begin(), nodes.end());
  auto edges = graph.reduced_edges;
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph dominance {\n";
  for (const auto& n : nodes) out << "  \"" << n << "\";\n";
  for (const auto& [winner, loser] : edges)
    out << "  \"" << winner << "\" -> \"" << loser << "\";\n";
  out << "}\n";
  return out.str();
}

std::string efficiency_csv(const std::vector<EfficiencyResult>& results,
                           const ReportOptions& opts) {
  std::ostringstream out;
  out << "setup,theta\n";
  for (const auto& r : results)
    out << r.setup << ',' << format_number(scaled(r.theta, opts)) << '\n';
  return out.str();
}

std::string efficiency_json(const std::vector<EfficiencyResult>& results,
                            const ReportOptions& opts) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ordered_json j;
    j["setup"] = r.setup;
    j["theta"] = scaled(r.theta, opts);
    j["form"] = r.form == FrontierForm::Convex ? "convex" : "affine";
    ordered_json peers = ordered_json::object();
    for (const auto& [name, w] : r.peer_weights) peers[name] = w;
    j["peer_weights"] = peers;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string frontier_csv(const std::vector<Point>& points,
                         const std::set<std::string>& frontier) {
  std::ostringstream out;
  out << "setup,on_frontier\n";
  for (const auto& p : points)
    out << p.setup << ',' << (frontier.count(p.setup) ? "true" : "false") << '\n';
  return out.str();
}

std::string frontier_json(const std::vector<Point>& points,
                          const std::set<std::string>& frontier) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : points) {
    ordered_json j;
    j["setup"] = p.setup;
    j["inputs"] = p.inputs;
    j["outputs"] = p.outputs;
    j["on_frontier"] = frontier.count(p.setup) > 0;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string bootstrap_csv(const std::vector<BootstrapDistribution>& dists,
                          const ReportOptions& opts) {
  std::ostringstream out;
  out << "setup,min,whisker_low,q1,median,q3,whisker_high,max\n";
  for (const auto& d : dists) {
    const auto& s = d.stats;
    out << d.setup;
    for (double v : {s.min, s.whisker_low, s.q1, s.median, s.q3, s.whisker_high,
                     s.max})
      out << ',' << format_number(scaled(v, opts));
    out << '\n';
  }
  return out.str();
}

std::string bootstrap_json(const std::vector<BootstrapDistribution>& dists,
                           const ReportOptions& opts) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : dists) {
    ordered_json j;
    j["setup"] = d.setup;
    j["stats"] = stats_json(d.stats, opts);
    if (opts.raw_samples) {
      ordered_json samples = ordered_json::array();
      for (double v : d.samples) samples.push_back(scaled(v, opts));
      j["samples"] = samples;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string rank_csv(const std::vector<RankEntry>& entries,
                     const ReportOptions& opts) {
  std::ostringstream out;
  out << "setup,theta,median,q1,q3,on_frontier,dominates,dominated_by\n";
  for (const auto& e : entries) {
    out << e.setup << ',' << format_number(scaled(e.theta, opts)) << ','
        << format_number(scaled(e.median, opts)) << ','
        << format_number(scaled(e.stats.q1, opts)) << ','
        << format_number(scaled(e.stats.q3, opts)) << ','
        << (e.on_frontier ? "true" : "false") << ',';
    for (std::size_t i = 0; i < e.dominates.size(); ++i)
      out << (i ? ";" : "") << e.dominates[i];
    out << ',';
    for (std::size_t i = 0; i < e.dominated_by.size(); ++i)
      out << (i ? ";" : "") << e.dominated_by[i];
    out << '\n';
  }
  return out.str();
}

std::string rank_json(const std::vector<RankEntry>& entries,
                      const ReportOptions& opts, const std::string& form,
                      int replicates, std::uint64_t seed, double tolerance) {
  ordered_json root;
  ordered_json config;
  config["form"] = form;
  config["replicates"] = replicates;
  config["seed"] = seed;
  config["tolerance"] = tolerance;
  config["scale_percent"] = opts.scale_percent;
  root["config"] = config;
  ordered_json setups = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["name"] = e.setup;
    j["theta"] = scaled(e.theta, opts);
    j["frontier"] = e.on_frontier;
    j["stats"] = stats_json(e.stats, opts);
    j["dominates"] = e.dominates;
    j["dominated_by"] = e.dominated_by;
    setups.push_back(std::move(j));
  }
  root["setups"] = setups;
  return root.dump(2) + "\n";
}

}  // namespace effrank

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "effrank/bootstrap.hpp"
#include "effrank/dataset.hpp"
#include "effrank/efficiency.hpp"
#include "effrank/errors.hpp"
#include "effrank/pareto.hpp"
#include "effrank/ranking.hpp"
#include "effrank/report.hpp"

namespace {

struct RunConfig {
  std::string input_path;
  std::string form = "convex";
  int replicates = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  std::string format;  // per-command default applied below
  bool raw_samples = false;
  bool no_percent = false;
  bool debug_lp = false;
  int threads = 1;
};

effrank::FrontierForm frontier_form(const RunConfig& cfg) {
  return cfg.form == "affine" ? effrank::FrontierForm::Affine
                              : effrank::FrontierForm::Convex;
}

std::vector<effrank::Point> summary_points(const effrank::SummaryTable& table) {
  std::vector<effrank::Point> points;
  for (const auto& s : table.setups)
    points.push_back(effrank::summary_point(table.metrics, s));
  return points;
}

std::vector<effrank::EfficiencyResult> score_or_dump(
    const effrank::SummaryTable& table, effrank::FrontierForm form, bool debug) {
  try {
    return effrank::efficiency_scores(table, form);
  } catch (const effrank::Error&) {
    if (debug) {
      const auto points = summary_points(table);
      for (std::size_t i = 0; i < points.size(); ++i)
        std::cerr << effrank::format_lp(effrank::build_dea_lp(points, i, form))
                  << '\n';
    }
    throw;
  }
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg,
                      const std::string& default_format,
                      const std::vector<std::string>& formats) {
  cmd->add_option("input", cfg.input_path, "dataset file (.csv or .json)")
      ->required();
  cmd->add_option("--form", cfg.form, "frontier form")
      ->check(CLI::IsMember({"convex", "affine"}))
      ->default_val("convex");
  cfg.format = default_format;
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(formats))
      ->default_val(default_format);
  cmd->add_flag("--no-percent", cfg.no_percent,
                "report theta in [0,1] instead of x100");
  cmd->add_flag("--debug-lp", cfg.debug_lp,
                "dump LP instances to stderr on solver failure");
}

void add_bootstrap_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--replicates", cfg.replicates, "bootstrap replicates B")
      ->check(CLI::PositiveNumber)
      ->default_val(1000);
  cmd->add_option("--seed", cfg.seed, "bootstrap seed")->default_val(0);
  cmd->add_option("--threads", cfg.threads, "worker threads for replicates")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
}

int run(const RunConfig& cfg, const std::string& command) {
  effrank::ReportOptions opts;
  opts.scale_percent = !cfg.no_percent;
  opts.raw_samples = cfg.raw_samples;

  const auto dataset = effrank::load_dataset(cfg.input_path);
  const auto table = effrank::summarize(dataset);
  if (dataset.repeat_count() == 1)
    std::cerr << "warning: single repeat per setup; stddev taken as 0\n";

  if (command == "efficiency") {
    const auto results = score_or_dump(table, frontier_form(cfg), cfg.debug_lp);
    std::cout << (cfg.format == "json" ? effrank::efficiency_json(results, opts)
                                       : effrank::efficiency_csv(results, opts));
    return 0;
  }
  if (command == "frontier") {
    const auto points = summary_points(table);
    const auto frontier = effrank::pareto_frontier(points);
    std::cout << (cfg.format == "json" ? effrank::frontier_json(points, frontier)
                                       : effrank::frontier_csv(points, frontier));
    return 0;
  }

  effrank::BootstrapConfig bcfg;
  bcfg.replicates = cfg.replicates;
  bcfg.seed = cfg.seed;
  bcfg.form = frontier_form(cfg);
  bcfg.threads = cfg.threads;
  const auto dists = effrank::bootstrap_efficiencies(table, bcfg);

  if (command == "bootstrap") {
    std::cout << (cfg.format == "json" ? effrank::bootstrap_json(dists, opts)
                                       : effrank::bootstrap_csv(dists, opts));
    return 0;
  }

  // rank
  const auto results = score_or_dump(table, frontier_form(cfg), cfg.debug_lp);
  const auto frontier = effrank::pareto_frontier(summary_points(table));
  const auto graph = effrank::dominance_graph(dists, cfg.tolerance);
  const auto entries = effrank::rank_report(results, dists, graph, frontier);
  if (cfg.format == "dot") {
    std::cout << effrank::render_dot(graph);
  } else if (cfg.format == "json") {
    std::cout << effrank::rank_json(entries, opts, cfg.form, cfg.replicates,
                                    cfg.seed, cfg.tolerance);
  } else {
    std::cout << effrank::rank_csv(entries, opts);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank competing setups by stochastic multi-dimensional relative efficiency"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* efficiency = app.add_subcommand("efficiency", "deterministic efficiency per setup");
  add_common_flags(efficiency, cfg, "csv", {"csv", "json"});

  auto* frontier = app.add_subcommand("frontier", "Pareto frontier membership");
  add_common_flags(frontier, cfg, "csv", {"csv", "json"});

  auto* bootstrap = app.add_subcommand("bootstrap", "bootstrap efficiency distributions");
  add_common_flags(bootstrap, cfg, "csv", {"csv", "json"});
  add_bootstrap_flags(bootstrap, cfg);
  bootstrap->add_flag("--raw-samples", cfg.raw_samples,
                      "include per-replicate samples (json only)");

  auto* rank = app.add_subcommand("rank", "full stochastic-dominance ranking");
  add_common_flags(rank, cfg, "csv", {"csv", "json", "dot"});
  add_bootstrap_flags(rank, cfg);
  rank->add_option("--tolerance", cfg.tolerance, "dominance tolerance")
      ->default_val(1e-12);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(cfg, command);
  } catch (const effrank::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool solver = e.code() == effrank::ErrorCode::SolverFailure ||
                        e.code() == effrank::ErrorCode::NumericalFailure;
    return solver ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

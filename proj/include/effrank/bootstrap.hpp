#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effrank/dataset.hpp"
#include "effrank/efficiency.hpp"
#include "effrank/pareto.hpp"

namespace effrank {

struct BootstrapConfig {
  int replicates = 1000;
  std::uint64_t seed = 0;
  FrontierForm form = FrontierForm::Convex;
  double positivity_floor = 1e-9;
  int threads = 1;
};

struct BoxplotStats {
  double min = 0, whisker_low = 0, q1 = 0, median = 0, q3 = 0,
         whisker_high = 0, max = 0;
};

struct BootstrapDistribution {
  std::string setup;
  std::vector<double> samples;  // theta per replicate, replicate order
  BoxplotStats stats;
};

// Gaussian resample of one setup. Each metric draws independently from
// Normal(mean, stddev); zero-stddev metrics return the mean exactly;
// input draws below positivity_floor are clamped to the floor.
Point sample_setup(const std::vector<MetricSpec>& metrics,
                   const SetupSummary& summary, std::uint64_t seed,
                   std::uint64_t replicate, std::uint64_t setup_index,
                   double positivity_floor = 1e-9);

// Parametric bootstrap: per replicate b, resample every setup, score the
// resampled points, record each setup's theta. Replicate b depends only
// on (seed, b), so results are bit-identical for any thread count.
std::vector<BootstrapDistribution> bootstrap_efficiencies(
    const SummaryTable& table, const BootstrapConfig& config);

// Type-7 (linear interpolation) quartiles, Tukey 1.5*IQR whiskers.
BoxplotStats boxplot_stats(const std::vector<double>& samples);

}  // namespace effrank

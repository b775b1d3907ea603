#include "effrank/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "effrank/errors.hpp"
#include "effrank/rng.hpp"

namespace effrank {

Point sample_setup(const std::vector<MetricSpec>& metrics,
                   const SetupSummary& summary, std::uint64_t seed,
                   std::uint64_t replicate, std::uint64_t setup_index,
                   double positivity_floor) {
  Point p;
  p.setup = summary.setup;
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    const auto& metric = metrics[m];
    const double mu = summary.mean.at(metric.name);
    const double sigma = summary.stddev.at(metric.name);
    double value = mu;
    if (sigma > 0.0) {
      CounterRng rng(seed, replicate, setup_index, m);
      value = rng.normal(mu, sigma);
    }
    if (metric.direction == Direction::Input) {
      if (value < positivity_floor) value = positivity_floor;
      p.inputs.push_back(value);
    } else {
      p.outputs.push_back(value);
    }
  }
  return p;
}

std::vector<BootstrapDistribution> bootstrap_efficiencies(
    const SummaryTable& table, const BootstrapConfig& config) {
  if (table.setups.empty())
    throw Error(ErrorCode::EmptySample, "no setups to bootstrap");
  if (config.replicates < 1)
    throw Error(ErrorCode::EmptySample, "replicates must be >= 1");

  const std::size_t n = table.setups.size();
  const std::size_t B = static_cast<std::size_t>(config.replicates);
  // samples[setup][replicate]
  std::vector<std::vector<double>> samples(n, std::vector<double>(B, 0.0));

  auto run_replicate = [&](std::size_t b) {
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      points.push_back(sample_setup(table.metrics, table.setups[i], config.seed,
                                    b + 1, i, config.positivity_floor));
    std::vector<EfficiencyResult> results;
    try {
      results = efficiency_scores(points, config.form);
    } catch (const Error& e) {
      throw Error(ErrorCode::SolverFailure,
                  "replicate " + std::to_string(b + 1) + ": " + e.what());
    }
    for (std::size_t i = 0; i < n; ++i) samples[i][b] = results[i].theta;
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1 || B == 1) {
    for (std::size_t b = 0; b < B; ++b) run_replicate(b);
  } else {
    // static block partition; slot b is written by exactly one worker
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t chunk = (B + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(B, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        try {
          for (std::size_t b = lo; b < hi; ++b) run_replicate(b);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<BootstrapDistribution> dists;
  dists.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BootstrapDistribution d;
    d.setup = table.setups[i].setup;
    d.samples = std::move(samples[i]);
    d.stats = boxplot_stats(d.samples);
    dists.push_back(std::move(d));
  }
  return dists;
}

namespace {

// Type-7 quantile: linear interpolation between order statistics.
double quantile(const std::vector<double>& sorted, double q) {
  const double h = q * (static_cast<double>(sorted.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

BoxplotStats boxplot_stats(const std::vector<double>& samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptySample, "no samples");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());

  BoxplotStats s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = quantile(sorted, 0.25);
  s.median = quantile(sorted, 0.5);
  s.q3 = quantile(sorted, 0.75);
  const double iqr = s.q3 - s.q1;
  const double lo_fence = s.q1 - 1.5 * iqr;
  const double hi_fence = s.q3 + 1.5 * iqr;
  s.whisker_low = s.q1;
  for (double v : sorted) {
    if (v >= lo_fence) {
      s.whisker_low = v;
      break;
    }
  }
  s.whisker_high = s.q3;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it <= hi_fence) {
      s.whisker_high = *it;
      break;
    }
  }
  return s;
}

}  // namespace effrank

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace effrank {

enum class Direction { Input, Output };

struct MetricSpec {
  std::string name;
  Direction direction;
};

// One repeat of one setup.
struct MeasurementRecord {
  std::string setup;
  int repeat = 1;
  std::map<std::string, double> values;
};

struct Dataset {
  std::vector<MetricSpec> metrics;
  std::vector<MeasurementRecord> records;

  // Distinct setup names in first-appearance order.
  std::vector<std::string> setups() const;
  int repeat_count() const;
};

// Per-setup per-metric mean and Bessel-corrected sample stddev.
// stddev is 0 when a setup has a single repeat.
struct SetupSummary {
  std::string setup;
  std::map<std::string, double> mean;
  std::map<std::string, double> stddev;
};

// Summaries keep the metric declarations so downstream consumers know
// which metrics are inputs and which are outputs.
struct SummaryTable {
  std::vector<MetricSpec> metrics;
  std::vector<SetupSummary> setups;

  std::vector<MetricSpec> input_metrics() const;
  std::vector<MetricSpec> output_metrics() const;
};

// Parses the CSV dataset format: header
//   setup,repeat,input:<name>[,...],output:<name>[,...]
// followed by one row per (setup, repeat). Validates all Dataset
// invariants and throws Error on violation.
Dataset parse_dataset_csv(std::istream& in);

// JSON mirror: {"metrics": [{"name","direction"}], "records": [...]}.
Dataset parse_dataset_json(std::istream& in);

// Dispatches on the file extension (".json" selects the JSON reader).
Dataset load_dataset(const std::string& path);

// Re-emits a dataset in the CSV format accepted by parse_dataset_csv.
std::string serialize_dataset_csv(const Dataset& dataset);

SummaryTable summarize(const Dataset& dataset);

}  // namespace effrank

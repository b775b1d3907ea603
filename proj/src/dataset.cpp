#include "effrank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "effrank/errors.hpp"

namespace effrank {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::NonNumericValue: return "NonNumericValue";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::UnevenRepeats: return "UnevenRepeats";
    case ErrorCode::TooFewSetups: return "TooFewSetups";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::UnequalSampleCounts: return "UnequalSampleCounts";
    case ErrorCode::InconsistentSetups: return "InconsistentSetups";
  }
  return "UnknownError";
}

std::vector<std::string> Dataset::setups() const {
  std::vector<std::string> names;
  for (const auto& record : records) {
    if (std::find(names.begin(), names.end(), record.setup) == names.end()) {
      names.push_back(record.setup);
    }
  }
  return names;
}

int Dataset::repeat_count() const {
  if (records.empty()) return 0;
  std::map<std::string, int> counts;
  for (const auto& record : records) counts[record.setup]++;
  return counts.begin()->second;
}

std::vector<MetricSpec> SummaryTable::input_metrics() const {
  std::vector<MetricSpec> out;
  for (const auto& m : metrics)
    if (m.direction == Direction::Input) out.push_back(m);
  return out;
}

std::vector<MetricSpec> SummaryTable::output_metrics() const {
  std::vector<MetricSpec> out;
  for (const auto& m : metrics)
    if (m.direction == Direction::Output) out.push_back(m);
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text, int row, const std::string& column) {
  const std::string t = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::NonNumericValue,
                "row " + std::to_string(row) + ", column '" + column +
                    "': cannot parse '" + t + "'");
  }
  return value;
}

void validate(Dataset& dataset) {
  std::set<std::string> seen_metrics;
  bool has_input = false, has_output = false;
  for (const auto& m : dataset.metrics) {
    if (m.name.empty())
      throw Error(ErrorCode::MalformedHeader, "empty metric name");
    if (!seen_metrics.insert(m.name).second)
      throw Error(ErrorCode::MalformedHeader, "duplicate metric '" + m.name + "'");
    (m.direction == Direction::Input ? has_input : has_output) = true;
  }
  if (!has_input || !has_output)
    throw Error(ErrorCode::MalformedHeader,
                "dataset needs at least one input and one output metric");

  int row = 0;
  for (const auto& record : dataset.records) {
    ++row;
    if (record.values.size() != dataset.metrics.size())
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(row) + ": wrong value count");
    for (const auto& m : dataset.metrics) {
      auto it = record.values.find(m.name);
      if (it == record.values.end())
        throw Error(ErrorCode::DimensionMismatch,
                    "row " + std::to_string(row) + ": missing metric '" + m.name + "'");
      if (!std::isfinite(it->second))
        throw Error(ErrorCode::NonNumericValue,
                    "row " + std::to_string(row) + ", metric '" + m.name +
                        "': non-finite value");
      if (m.direction == Direction::Input && it->second <= 0.0)
        throw Error(ErrorCode::NonPositiveInput,
                    "row " + std::to_string(row) + ", input metric '" + m.name +
                        "' must be > 0, got " + std::to_string(it->second));
    }
  }

  std::map<std::string, int> counts;
  for (const auto& record : dataset.records) counts[record.setup]++;
  if (counts.size() < 2)
    throw Error(ErrorCode::TooFewSetups,
                "need at least 2 setups, got " + std::to_string(counts.size()));
  const int k = counts.begin()->second;
  for (const auto& [setup, count] : counts) {
    if (count != k)
      throw Error(ErrorCode::UnevenRepeats,
                  "setup '" + setup + "' has " + std::to_string(count) +
                      " repeats, expected " + std::to_string(k));
  }
}

}  // namespace

Dataset parse_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::MalformedHeader, "empty input");
  auto header = split_csv_line(trim(line));
  if (header.size() < 3 || trim(header[0]) != "setup" || trim(header[1]) != "repeat")
    throw Error(ErrorCode::MalformedHeader,
                "header must start with 'setup,repeat' followed by metric columns");

  Dataset dataset;
  for (std::size_t c = 2; c < header.size(); ++c) {
    const std::string col = trim(header[c]);
    if (col.rfind("input:", 0) == 0) {
      dataset.metrics.push_back({col.substr(6), Direction::Input});
    } else if (col.rfind("output:", 0) == 0) {
      dataset.metrics.push_back({col.substr(7), Direction::Output});
    } else {
      throw Error(ErrorCode::MalformedHeader,
                  "metric column '" + col + "' lacks input:/output: prefix");
    }
  }

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw Error(ErrorCode::NonNumericValue,
                  "row " + std::to_string(row) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    MeasurementRecord record;
    record.setup = trim(fields[0]);
    record.repeat =
        static_cast<int>(parse_number(fields[1], row, "repeat"));
    for (std::size_t c = 2; c < fields.size(); ++c) {
      const auto& metric = dataset.metrics[c - 2];
      record.values[metric.name] = parse_number(fields[c], row, metric.name);
    }
    dataset.records.push_back(std::move(record));
  }

  validate(dataset);
  return dataset;
}

Dataset parse_dataset_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedHeader, e.what());
  }
  Dataset dataset;
  try {
    for (const auto& m : j.at("metrics")) {
      const std::string dir = m.at("direction");
      if (dir != "input" && dir != "output")
        throw Error(ErrorCode::MalformedHeader,
                    "direction must be 'input' or 'output', got '" + dir + "'");
      dataset.metrics.push_back(
          {m.at("name"), dir == "input" ? Direction::Input : Direction::Output});
    }
    for (const auto& r : j.at("records")) {
      MeasurementRecord record;
      record.setup = r.at("setup");
      record.repeat = r.at("repeat");
      for (const auto& [name, value] : r.at("values").items()) {
        if (!value.is_number())
          throw Error(ErrorCode::NonNumericValue,
                      "metric '" + name + "' is not a number");
        record.values[name] = value.get<double>();
      }
      dataset.records.push_back(std::move(record));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedHeader, e.what());
  }
  validate(dataset);
  return dataset;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedHeader, "cannot open '" + path + "'");
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return parse_dataset_json(in);
  return parse_dataset_csv(in);
}

std::string serialize_dataset_csv(const Dataset& dataset) {
  std::ostringstream out;
  out << "setup,repeat";
  for (const auto& m : dataset.metrics) {
    out << ',' << (m.direction == Direction::Input ? "input:" : "output:")
        << m.name;
  }
  out << '\n';
  out.precision(17);
  for (const auto& record : dataset.records) {
    out << record.setup << ',' << record.repeat;
    for (const auto& m : dataset.metrics) out << ',' << record.values.at(m.name);
    out << '\n';
  }
  return out.str();
}

SummaryTable summarize(const Dataset& dataset) {
  SummaryTable table;
  table.metrics = dataset.metrics;
  for (const auto& setup : dataset.setups()) {
    SetupSummary summary;
    summary.setup = setup;
    for (const auto& metric : dataset.metrics) {
      std::vector<double> values;
      for (const auto& record : dataset.records)
        if (record.setup == setup) values.push_back(record.values.at(metric.name));
      const double k = static_cast<double>(values.size());
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= k;
      double sd = 0.0;
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        sd = std::sqrt(ss / (k - 1.0));
      }
      summary.mean[metric.name] = mean;
      summary.stddev[metric.name] = sd;
    }
    table.setups.push_back(std::move(summary));
  }
  return table;
}

}  // namespace effrank

// Copyright 2026 The Sidelink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sidelink/report_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "sidelink/errors.h"
#include "sidelink/scenario_io.h"

namespace sidelink {
namespace {

using nlohmann::json;

std::string Fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

double Round6(double value) { return std::round(value * 1e6) / 1e6; }

json MetricsJson(const Metrics& m) {
  return {{"highest_rate", Round6(m.highest_rate)},
          {"worst_rate", Round6(m.worst_rate)},
          {"mean_rate", Round6(m.mean_rate)},
          {"std_rate", Round6(m.std_rate)}};
}

Metrics MetricsFromJson(const json& j) {
  return {j.at("highest_rate").get<double>(), j.at("worst_rate").get<double>(),
          j.at("mean_rate").get<double>(), j.at("std_rate").get<double>()};
}

json RoundedArray(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(Round6(v));
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

ReportFormat ParseReportFormat(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw InvalidParameterError("unknown report format '" + name +
                              "' (expected csv or json)");
}

std::string RatesCsv(const ExperimentReport& report) {
  std::string out = "trial,cluster,algorithm,vehicle,rate\n";
  for (const VehicleRate& r : report.rates) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.cluster) + ',' +
           ToString(r.algorithm) + ',' + std::to_string(r.vehicle) + ',' +
           Fixed(r.rate) + '\n';
  }
  return out;
}

std::string SummaryCsv(const ExperimentReport& report) {
  std::string out = "algorithm,trials,highest_rate,worst_rate,mean_rate,std_rate\n";
  for (const AlgorithmSummary& s : report.summaries) {
    const Metrics& m = s.mean_metrics;
    out += ToString(s.algorithm) + ',' + std::to_string(report.n_trials) + ',' +
           Fixed(m.highest_rate) + ',' + Fixed(m.worst_rate) + ',' +
           Fixed(m.mean_rate) + ',' + Fixed(m.std_rate) + '\n';
  }
  return out;
}

std::string CdfCsv(const ExperimentReport& report) {
  std::string out = "threshold";
  for (const AlgorithmSummary& s : report.summaries) out += ',' + ToString(s.algorithm);
  out += '\n';
  for (std::size_t g = 0; g < report.cdf_grid.size(); ++g) {
    out += Fixed(report.cdf_grid[g]);
    for (const AlgorithmSummary& s : report.summaries) out += ',' + Fixed(s.cdf[g]);
    out += '\n';
  }
  return out;
}

std::string TimingsCsv(const ExperimentReport& report) {
  std::string out = "trial,cluster,algorithm,seconds\n";
  for (const SolveTiming& t : report.timings) {
    out += std::to_string(t.trial) + ',' + std::to_string(t.cluster) + ',' +
           ToString(t.algorithm) + ',' + Fixed(t.seconds, 9) + '\n';
  }
  return out;
}

std::string ReportToJson(const ExperimentReport& report, const ExportOptions& options) {
  json algorithms = json::array();
  for (Algorithm a : report.algorithms) algorithms.push_back(ToString(a));

  json rates = json::array();
  for (const VehicleRate& r : report.rates) {
    rates.push_back({{"trial", r.trial},
                     {"cluster", r.cluster},
                     {"algorithm", ToString(r.algorithm)},
                     {"vehicle", r.vehicle},
                     {"rate", Round6(r.rate)}});
  }
  json trial_metrics = json::array();
  for (const TrialMetrics& t : report.trial_metrics) {
    trial_metrics.push_back({{"trial", t.trial},
                             {"algorithm", ToString(t.algorithm)},
                             {"metrics", MetricsJson(t.metrics)}});
  }
  json summaries = json::array();
  for (const AlgorithmSummary& s : report.summaries) {
    summaries.push_back({{"algorithm", ToString(s.algorithm)},
                         {"mean_metrics", MetricsJson(s.mean_metrics)},
                         {"cdf", RoundedArray(s.cdf)}});
  }
  json out{{"config", json::parse(ConfigToJson(report.config))},
           {"n_trials", report.n_trials},
           {"algorithms", std::move(algorithms)},
           {"rates", std::move(rates)},
           {"trial_metrics", std::move(trial_metrics)},
           {"summaries", std::move(summaries)},
           {"cdf_grid", RoundedArray(report.cdf_grid)}};
  if (options.include_timings) {
    json timings = json::array();
    for (const SolveTiming& t : report.timings) {
      timings.push_back({{"trial", t.trial},
                         {"cluster", t.cluster},
                         {"algorithm", ToString(t.algorithm)},
                         {"seconds", t.seconds}});
    }
    out["timings"] = std::move(timings);
  }
  return out.dump(2) + "\n";
}

ExperimentReport ReportFromJson(const std::string& text) {
  ExperimentReport report;
  try {
    const json j = json::parse(text);
    report.config = ConfigFromJson(j.at("config").dump());
    report.n_trials = j.at("n_trials").get<std::size_t>();
    for (const json& a : j.at("algorithms")) {
      report.algorithms.push_back(ParseAlgorithm(a.get<std::string>()));
    }
    for (const json& r : j.at("rates")) {
      report.rates.push_back({r.at("trial").get<std::size_t>(),
                              r.at("cluster").get<std::size_t>(),
                              ParseAlgorithm(r.at("algorithm").get<std::string>()),
                              r.at("vehicle").get<std::size_t>(),
                              r.at("rate").get<double>()});
    }
    for (const json& t : j.at("trial_metrics")) {
      report.trial_metrics.push_back(
          {t.at("trial").get<std::size_t>(),
           ParseAlgorithm(t.at("algorithm").get<std::string>()),
           MetricsFromJson(t.at("metrics"))});
    }
    for (const json& s : j.at("summaries")) {
      report.summaries.push_back({ParseAlgorithm(s.at("algorithm").get<std::string>()),
                                  MetricsFromJson(s.at("mean_metrics")),
                                  s.at("cdf").get<std::vector<double>>()});
    }
    report.cdf_grid = j.at("cdf_grid").get<std::vector<double>>();
    if (j.contains("timings")) {
      for (const json& t : j.at("timings")) {
        report.timings.push_back({t.at("trial").get<std::size_t>(),
                                  t.at("cluster").get<std::size_t>(),
                                  ParseAlgorithm(t.at("algorithm").get<std::string>()),
                                  t.at("seconds").get<double>()});
      }
    }
  } catch (const json::exception& e) {
    throw InvalidConfigError(std::string("malformed report: ") + e.what());
  }
  return report;
}

void ExportReport(const ExperimentReport& report, ReportFormat format,
                  const std::filesystem::path& directory,
                  const ExportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create output directory " + directory.string() + ": " +
                  ec.message());
  }
  if (format == ReportFormat::kJson) {
    WriteFile(directory / "report.json", ReportToJson(report, options));
    return;
  }
  WriteFile(directory / "rates.csv", RatesCsv(report));
  WriteFile(directory / "summary.csv", SummaryCsv(report));
  WriteFile(directory / "cdf.csv", CdfCsv(report));
  if (options.include_timings) WriteFile(directory / "timings.csv", TimingsCsv(report));
}

}  // namespace sidelink

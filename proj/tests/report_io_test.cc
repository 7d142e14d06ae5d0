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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

namespace fs = std::filesystem;

std::string ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentReport SampleReport() {
  ScenarioConfig c;
  c.vehicles_per_cluster = 4;
  c.n_clusters = 2;
  c.n_subframes = 5;
  c.resources_per_subframe = 2;
  c.seed = 8;
  ExperimentOptions options;
  options.record_timings = false;
  return RunExperiment(c, AllAlgorithms(), 4, options);
}

class ReportIoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sidelink_report_io_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(ReportIoTest, EmptyReportGivesHeaderOnlyCsv) {
  const ExperimentReport empty = RunExperiment(ScenarioConfig{}, {Algorithm::kGraph, Algorithm::kGreedy}, 0);
  ExportReport(empty, ReportFormat::kCsv, dir_);
  EXPECT_EQ(ReadAll(dir_ / "rates.csv"), "trial,cluster,algorithm,vehicle,rate\n");
  EXPECT_EQ(ReadAll(dir_ / "summary.csv"),
            "algorithm,trials,highest_rate,worst_rate,mean_rate,std_rate\n");
  EXPECT_EQ(ReadAll(dir_ / "cdf.csv"), "threshold\n");
  EXPECT_FALSE(fs::exists(dir_ / "timings.csv"));
}

TEST_F(ReportIoTest, CsvLayout) {
  const ExperimentReport r = SampleReport();
  const std::string rates = RatesCsv(r);
  std::istringstream in(rates);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "trial,cluster,algorithm,vehicle,rate");
  EXPECT_EQ(first.rfind("0,0,graph,0,", 0), 0u);
  // Six fractional digits.
  EXPECT_EQ(first.size() - first.find('.') - 1, 6u);
  EXPECT_EQ(std::count(rates.begin(), rates.end(), '\n'), 1 + 4 * 2 * 4 * 4);
  const std::string cdf = CdfCsv(r);
  EXPECT_EQ(cdf.substr(0, cdf.find('\n')), "threshold,graph,exhaustive,greedy,random");
  EXPECT_EQ(std::count(cdf.begin(), cdf.end(), '\n'), 31);
}

TEST_F(ReportIoTest, ExportsAreByteIdentical) {
  const ExperimentReport r = SampleReport();
  for (ReportFormat f : {ReportFormat::kCsv, ReportFormat::kJson}) {
    ExportReport(r, f, dir_ / "a");
    ExportReport(r, f, dir_ / "b");
  }
  for (const char* name : {"rates.csv", "summary.csv", "cdf.csv", "report.json"}) {
    EXPECT_EQ(ReadAll(dir_ / "a" / name), ReadAll(dir_ / "b" / name)) << name;
  }
  // A fresh run of the same experiment serializes identically too.
  EXPECT_EQ(ReportToJson(SampleReport()), ReportToJson(r));
}

TEST_F(ReportIoTest, JsonRoundTrip) {
  const ExperimentReport r = SampleReport();
  const std::string text = ReportToJson(r);
  const ExperimentReport back = ReportFromJson(text);
  EXPECT_EQ(ReportToJson(back), text);
  EXPECT_EQ(back.config, r.config);
  EXPECT_EQ(back.algorithms, r.algorithms);
  ASSERT_EQ(back.rates.size(), r.rates.size());
  for (std::size_t i = 0; i < r.rates.size(); ++i) {
    EXPECT_EQ(back.rates[i].algorithm, r.rates[i].algorithm);
    EXPECT_EQ(back.rates[i].vehicle, r.rates[i].vehicle);
    EXPECT_NEAR(back.rates[i].rate, r.rates[i].rate, 1e-6);
  }
  ASSERT_EQ(back.summaries.size(), r.summaries.size());
  for (std::size_t i = 0; i < r.summaries.size(); ++i) {
    EXPECT_NEAR(back.summaries[i].mean_metrics.mean_rate,
                r.summaries[i].mean_metrics.mean_rate, 1e-6);
  }
}

TEST_F(ReportIoTest, TimingsOnlyOnRequest) {
  ScenarioConfig c;
  c.vehicles_per_cluster = 3;
  c.n_subframes = 3;
  const ExperimentReport r = RunExperiment(c, {Algorithm::kGraph}, 2);
  ASSERT_EQ(r.timings.size(), 2u);
  EXPECT_EQ(ReportToJson(r).find("timings"), std::string::npos);
  const std::string with = ReportToJson(r, {.include_timings = true});
  EXPECT_NE(with.find("timings"), std::string::npos);
  EXPECT_EQ(ReportFromJson(with).timings.size(), 2u);
  ExportReport(r, ReportFormat::kCsv, dir_, {.include_timings = true});
  EXPECT_TRUE(fs::exists(dir_ / "timings.csv"));
}

TEST_F(ReportIoTest, Errors) {
  EXPECT_THROW(ParseReportFormat("xml"), InvalidParameterError);
  EXPECT_THROW(ReportFromJson("{}"), InvalidConfigError);
  EXPECT_THROW(ExportReport(SampleReport(), ReportFormat::kCsv, "/proc/sidelink_denied"),
               IoError);
}

}  // namespace
}  // namespace sidelink

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

#ifndef SIDELINK_REPORT_IO_H_
#define SIDELINK_REPORT_IO_H_

#include <filesystem>
#include <string>

#include "sidelink/experiment.h"

namespace sidelink {

enum class ReportFormat { kCsv, kJson };

// Throws InvalidParameterError for anything but "csv" or "json".
ReportFormat ParseReportFormat(const std::string& name);

struct ExportOptions {
  bool include_timings = false;
};

// CSV tables. Numbers use fixed notation with 6 fractional digits.
std::string RatesCsv(const ExperimentReport& report);
std::string SummaryCsv(const ExperimentReport& report);
std::string CdfCsv(const ExperimentReport& report);
std::string TimingsCsv(const ExperimentReport& report);

// Nested JSON with sorted keys; floating values rounded to 6 fractional
// digits.
std::string ReportToJson(const ExperimentReport& report,
                         const ExportOptions& options = {});
ExperimentReport ReportFromJson(const std::string& text);

// Writes rates.csv, summary.csv and cdf.csv (csv) or report.json (json)
// into `directory`, creating it when needed; timings.csv only on request.
// Output bytes depend only on the report. Throws IoError with the failing
// path.
void ExportReport(const ExperimentReport& report, ReportFormat format,
                  const std::filesystem::path& directory,
                  const ExportOptions& options = {});

}  // namespace sidelink

#endif  // SIDELINK_REPORT_IO_H_

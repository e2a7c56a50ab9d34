// Copyright 2026 The hemine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEMINE_DATASET_IO_H_
#define HEMINE_DATASET_IO_H_

#include <array>
#include <chrono>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hemine/change_attribution.h"
#include "hemine/he_metrics.h"
#include "hemine/method_parser.h"

namespace hemine {

inline constexpr int kNumFeatures = 15;

// The final version of a method: where it sits and its line-class counts.
struct MethodSnapshot {
  int start_line = 0;
  int end_line = 0;
  CodeMetrics code;
};

struct FeatureRow {
  std::string project;
  std::string file_path;
  std::string method_name;
  int start_line = 0;
  int end_line = 0;
  HistoryMetrics history;
  CodeMetrics code;
  HEMetrics he;
  int label = 0;

  // h1..h9, c1..c4, e1, e2 in header order.
  std::array<double, kNumFeatures> features() const;

  friend bool operator==(const FeatureRow&, const FeatureRow&) = default;
};

struct ProjectSummary {
  std::string project;
  std::string start_date;
  int commits = 0;
  int files = 0;
  int methods = 0;
  int defective_methods = 0;
  long long loc = 0;
};

// One row per method in `methods`. Missing history or HE entries become
// zeros, missing labels 0. Rows are sorted by (file_path, start_line,
// method_name). Throws KeyMismatch when another map names an unknown method.
std::vector<FeatureRow> assemble(
    std::string_view project, const std::map<MethodKey, MethodSnapshot>& methods,
    const std::map<MethodKey, HistoryMetrics>& histories,
    const std::map<MethodKey, HEMetrics>& he_metrics,
    const std::map<MethodKey, int>& labels);

std::string_view csv_header();

// Fixed-point with at most 6 fractional digits (ties to even), trailing
// zeros dropped, never exponent notation.
std::string format_decimal(double value);

// Writes header plus one LF-terminated line per row. Returns bytes written.
// Throws IoFailure when the stream goes bad.
std::size_t write_csv(std::span<const FeatureRow> rows, std::ostream& out);

// Parses the format produced by write_csv. Throws IoFailure on malformed
// input or a header mismatch.
std::vector<FeatureRow> read_csv(std::istream& in);

ProjectSummary summarize(std::string_view project,
                         std::chrono::sys_days start_date, int commits,
                         std::span<const FeatureRow> rows);

// Percentage of defective methods with one decimal, e.g. "13.3%".
std::string defective_percent(const ProjectSummary& summary);

std::string format_summary_text(const ProjectSummary& summary);

// Header line plus one record line, both LF-terminated.
std::string format_summary_csv(const ProjectSummary& summary);

}  // namespace hemine

#endif  // HEMINE_DATASET_IO_H_

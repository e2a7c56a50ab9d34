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

// End-to-end mining: commits -> change events -> per-method features.

#ifndef HEMINE_PIPELINE_H_
#define HEMINE_PIPELINE_H_

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hemine/change_attribution.h"
#include "hemine/dataset_io.h"
#include "hemine/he_metrics.h"

namespace hemine {

struct MineConfig {
  std::filesystem::path repo_path;
  std::chrono::sys_days since;
  std::chrono::sys_days until;
  std::optional<std::filesystem::path> keywords_path;
  std::optional<std::string> project_name;  // default: repo directory name
  ForgettingCurveParams curve;
  int max_threads = 0;  // 0 lets the scheduler decide
};

struct MineDiagnostics {
  int commits = 0;
  int bugfix_commits = 0;
  int change_events = 0;
  int file_revisions_parsed = 0;
  int duplicate_names_dropped = 0;
  int unbalanced_files = 0;
  int clock_skew = 0;
};

struct MineResult {
  std::vector<FeatureRow> rows;
  ProjectSummary summary;
  MineDiagnostics diagnostics;
};

std::string default_project_name(const std::filesystem::path& repo_path);

// Runs the whole pipeline. Throws UsageError (bad dates, curve parameters or
// keyword rules), NotARepository, or IoFailure.
MineResult mine(const MineConfig& config);

}  // namespace hemine

#endif  // HEMINE_PIPELINE_H_

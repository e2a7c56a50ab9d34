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

#ifndef HEMINE_CHANGE_ATTRIBUTION_H_
#define HEMINE_CHANGE_ATTRIBUTION_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hemine/method_parser.h"
#include "hemine/repo_ingest.h"

namespace hemine {

// A method is identified by its (rename-chased) file path and its name.
struct MethodKey {
  std::string file_path;
  std::string method_name;

  friend auto operator<=>(const MethodKey&, const MethodKey&) = default;
};

struct ChangeEvent {
  MethodKey key;
  std::string commit_id;
  AuthorId author;
  Timestamp authored_at;
  int added = 0;
  int deleted = 0;
  int changed = 0;
};

struct HistoryMetrics {
  int h1_authors = 0;
  int h2_added_loc = 0;
  int h3_changed_loc = 0;
  int h4_num_changes = 0;
  double h5_added_per_loc = 0.0;
  double h6_changed_per_change = 0.0;
  double h7_added_per_deleted = 0.0;
  int h8_deleted_loc = 0;
  double h9_deleted_per_loc = 0.0;

  friend bool operator==(const HistoryMetrics&,
                         const HistoryMetrics&) = default;
};

// Maps the hunks of one file diff onto the methods on each side.
//
// Within a hunk, deleted lines are charged to the pre-image method that
// contains them and added lines to the post-image method. When one method
// name has both, min(added, deleted) lines count as changed and are removed
// from the other two tallies. Per-hunk results are summed into one event per
// method, ordered by method name. Events are keyed by diff.path().
std::vector<ChangeEvent> attribute_changes(
    const FileDiff& diff, std::span<const MethodSpan> pre_methods,
    std::span<const MethodSpan> post_methods, const CommitRecord& commit);

// Folds one method's events. Ratios divide by max(1, denominator); LOC
// denominators use `final_loc`, the C2 of the method's final version.
// Throws EmptyEventList on an empty list.
HistoryMetrics fold_history(std::span<const ChangeEvent> events, int final_loc);

// Same as fold_history, but returns all-zero metrics for no events.
HistoryMetrics fold_history_or_zero(std::span<const ChangeEvent> events,
                                    int final_loc);

}  // namespace hemine

#endif  // HEMINE_CHANGE_ATTRIBUTION_H_

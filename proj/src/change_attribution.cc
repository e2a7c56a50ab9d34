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

#include "hemine/change_attribution.h"

#include <algorithm>
#include <map>
#include <set>

#include "hemine/error.h"

namespace hemine {
namespace {

// Spans are non-overlapping; a linear scan is fine for per-file counts.
const MethodSpan* find_span(std::span<const MethodSpan> spans, int line) {
  for (const MethodSpan& s : spans) {
    if (line >= s.start_line && line <= s.end_line) return &s;
  }
  return nullptr;
}

struct Tally {
  int added = 0;
  int deleted = 0;
  int changed = 0;
};

}  // namespace

std::vector<ChangeEvent> attribute_changes(
    const FileDiff& diff, std::span<const MethodSpan> pre_methods,
    std::span<const MethodSpan> post_methods, const CommitRecord& commit) {
  std::map<std::string, Tally> totals;
  for (const DiffHunk& hunk : diff.hunks) {
    std::map<std::string, Tally> in_hunk;
    for (int line : hunk.deleted_lines) {
      if (const MethodSpan* s = find_span(pre_methods, line)) {
        ++in_hunk[s->name].deleted;
      }
    }
    for (int line : hunk.added_lines) {
      if (const MethodSpan* s = find_span(post_methods, line)) {
        ++in_hunk[s->name].added;
      }
    }
    for (auto& [name, t] : in_hunk) {
      const int paired = std::min(t.added, t.deleted);
      Tally& total = totals[name];
      total.changed += paired;
      total.added += t.added - paired;
      total.deleted += t.deleted - paired;
    }
  }

  std::vector<ChangeEvent> events;
  events.reserve(totals.size());
  for (const auto& [name, t] : totals) {
    ChangeEvent e;
    e.key = MethodKey{diff.path(), name};
    e.commit_id = commit.commit_id;
    e.author = commit.author;
    e.authored_at = commit.authored_at;
    e.added = t.added;
    e.deleted = t.deleted;
    e.changed = t.changed;
    events.push_back(std::move(e));
  }
  return events;
}

HistoryMetrics fold_history(std::span<const ChangeEvent> events,
                            int final_loc) {
  if (events.empty()) throw EmptyEventList("no change events to fold");
  HistoryMetrics h;
  std::set<AuthorId> authors;
  for (const ChangeEvent& e : events) {
    authors.insert(e.author);
    h.h2_added_loc += e.added;
    h.h3_changed_loc += e.changed;
    h.h8_deleted_loc += e.deleted;
  }
  h.h1_authors = static_cast<int>(authors.size());
  h.h4_num_changes = static_cast<int>(events.size());
  const double loc = std::max(1, final_loc);
  h.h5_added_per_loc = h.h2_added_loc / loc;
  h.h6_changed_per_change =
      static_cast<double>(h.h3_changed_loc) / std::max(1, h.h4_num_changes);
  h.h7_added_per_deleted =
      static_cast<double>(h.h2_added_loc) / std::max(1, h.h8_deleted_loc);
  h.h9_deleted_per_loc = h.h8_deleted_loc / loc;
  return h;
}

HistoryMetrics fold_history_or_zero(std::span<const ChangeEvent> events,
                                    int final_loc) {
  if (events.empty()) return {};
  return fold_history(events, final_loc);
}

}  // namespace hemine

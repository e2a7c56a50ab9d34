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

#ifndef HEMINE_TIMESTAMP_H_
#define HEMINE_TIMESTAMP_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hemine {

// An instant plus the UTC offset the author's clock showed at that instant.
// The offset is kept as recorded; it is only applied when a local clock time
// is asked for.
struct Timestamp {
  std::int64_t unix_seconds = 0;
  std::int32_t utc_offset_minutes = 0;

  std::int64_t local_seconds() const {
    return unix_seconds + std::int64_t{utc_offset_minutes} * 60;
  }

  // Seconds since local midnight, in [0, 86400).
  int local_seconds_of_day() const;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

// Parses git's raw date format, e.g. "1614560400 +0900".
Timestamp parse_git_raw_date(std::string_view text);

// ISO-8601 with offset, e.g. "2021-03-01T10:00:00+09:00".
std::string format_iso8601(const Timestamp& ts);

// Parses a calendar date "YYYY-MM-DD". Throws UsageError when malformed.
std::chrono::sys_days parse_date(std::string_view text);

std::string format_date(std::chrono::sys_days day);

// Calendar-date window [since 00:00, until 24:00), compared in UTC.
class DateWindow {
 public:
  // Throws InvalidDateRange when since > until.
  DateWindow(std::chrono::sys_days since, std::chrono::sys_days until);

  bool contains(const Timestamp& ts) const {
    return ts.unix_seconds >= begin_ && ts.unix_seconds < end_;
  }

  std::chrono::sys_days since() const { return since_; }
  std::chrono::sys_days until() const { return until_; }

 private:
  std::chrono::sys_days since_;
  std::chrono::sys_days until_;
  std::int64_t begin_;
  std::int64_t end_;
};

}  // namespace hemine

#endif  // HEMINE_TIMESTAMP_H_

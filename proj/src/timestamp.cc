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

#include "hemine/timestamp.h"

#include <charconv>
#include <cstdio>

#include "hemine/error.h"

namespace hemine {
namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

template <typename T>
bool parse_int(std::string_view text, T& out) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int Timestamp::local_seconds_of_day() const {
  return static_cast<int>(floor_mod(local_seconds(), kSecondsPerDay));
}

Timestamp parse_git_raw_date(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw IoFailure("malformed git date: " + std::string(text));
  }
  Timestamp ts;
  std::string_view zone = text.substr(space + 1);
  int hh = 0;
  int mm = 0;
  if (!parse_int(text.substr(0, space), ts.unix_seconds) || zone.size() != 5 ||
      (zone[0] != '+' && zone[0] != '-') ||
      !parse_int(zone.substr(1, 2), hh) || !parse_int(zone.substr(3, 2), mm)) {
    throw IoFailure("malformed git date: " + std::string(text));
  }
  ts.utc_offset_minutes = (zone[0] == '-' ? -1 : 1) * (hh * 60 + mm);
  return ts;
}

std::string format_iso8601(const Timestamp& ts) {
  using namespace std::chrono;
  const std::int64_t local = ts.local_seconds();
  const auto day = sys_days{days{(local - floor_mod(local, kSecondsPerDay)) /
                                 kSecondsPerDay}};
  const year_month_day ymd{day};
  const int sod = ts.local_seconds_of_day();
  const int off = ts.utc_offset_minutes < 0 ? -ts.utc_offset_minutes
                                            : ts.utc_offset_minutes;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d%c%02d:%02d",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), sod / 3600,
                (sod / 60) % 60, sod % 60,
                ts.utc_offset_minutes < 0 ? '-' : '+', off / 60, off % 60);
  return buf;
}

std::chrono::sys_days parse_date(std::string_view text) {
  using namespace std::chrono;
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
      !parse_int(text.substr(8, 2), d)) {
    throw UsageError("invalid date '" + std::string(text) +
                     "', expected YYYY-MM-DD");
  }
  const year_month_day ymd{year{y}, month{m}, day{d}};
  if (!ymd.ok()) {
    throw UsageError("invalid date '" + std::string(text) + "'");
  }
  return sys_days{ymd};
}

std::string format_date(std::chrono::sys_days day) {
  const std::chrono::year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

DateWindow::DateWindow(std::chrono::sys_days since, std::chrono::sys_days until)
    : since_(since), until_(until) {
  if (since > until) {
    throw InvalidDateRange("invalid date range: since " + format_date(since) +
                           " is after until " + format_date(until));
  }
  begin_ = since.time_since_epoch().count() * kSecondsPerDay;
  end_ = (until.time_since_epoch().count() + 1) * kSecondsPerDay;
}

}  // namespace hemine

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

#include <gtest/gtest.h>

#include "hemine/error.h"

namespace hemine {
namespace {

using namespace std::chrono_literals;
using std::chrono::sys_days;

TEST(ParseGitRawDateTest, Offsets) {
  EXPECT_EQ(parse_git_raw_date("1614560400 +0900"), (Timestamp{1614560400, 540}));
  EXPECT_EQ(parse_git_raw_date("0 -0530"), (Timestamp{0, -330}));
  EXPECT_EQ(parse_git_raw_date("1614560400 +0000"), (Timestamp{1614560400, 0}));
}

TEST(ParseGitRawDateTest, Malformed) {
  EXPECT_THROW(parse_git_raw_date(""), Error);
  EXPECT_THROW(parse_git_raw_date("1614560400"), Error);
  EXPECT_THROW(parse_git_raw_date("abc +0100"), Error);
}

TEST(TimestampTest, LocalClock) {
  // 2021-03-01T01:00:00Z
  const Timestamp tokyo{1614560400, 540};
  EXPECT_EQ(tokyo.local_seconds_of_day(), 10 * 3600);
  const Timestamp new_york{1614560400, -300};
  EXPECT_EQ(new_york.local_seconds_of_day(), 20 * 3600);
  EXPECT_EQ(format_iso8601(tokyo), "2021-03-01T10:00:00+09:00");
  EXPECT_EQ(format_iso8601(new_york), "2021-02-28T20:00:00-05:00");
  EXPECT_EQ(format_iso8601({0, -330}), "1969-12-31T18:30:00-05:30");
}

TEST(ParseDateTest, Valid) {
  EXPECT_EQ(parse_date("2020-01-01"), sys_days{2020y / 1 / 1});
  EXPECT_EQ(parse_date("2024-02-29"), sys_days{2024y / 2 / 29});
  EXPECT_EQ(format_date(sys_days{2021y / 3 / 5}), "2021-03-05");
}

TEST(ParseDateTest, Invalid) {
  for (const char* bad : {"", "2020-1-01", "2020/01/01", "2023-02-29",
                          "2020-13-01", "20200101", "2020-01-01x"}) {
    EXPECT_THROW(parse_date(bad), UsageError) << bad;
  }
}

TEST(DateWindowTest, InclusiveCalendarDays) {
  const DateWindow w(sys_days{2021y / 3 / 1}, sys_days{2021y / 3 / 2});
  const std::int64_t start = 1614556800;  // 2021-03-01T00:00Z
  EXPECT_FALSE(w.contains({start - 1, 0}));
  EXPECT_TRUE(w.contains({start, 0}));
  EXPECT_TRUE(w.contains({start + 2 * 86400 - 1, 0}));
  EXPECT_FALSE(w.contains({start + 2 * 86400, 0}));
  // The offset does not move the instant.
  EXPECT_FALSE(w.contains({start - 1, 540}));
}

TEST(DateWindowTest, SingleDayAndReversed) {
  const DateWindow day(sys_days{2021y / 3 / 1}, sys_days{2021y / 3 / 1});
  EXPECT_TRUE(day.contains({1614560400, 0}));
  EXPECT_THROW(DateWindow(sys_days{2021y / 3 / 2}, sys_days{2021y / 3 / 1}),
               InvalidDateRange);
}

}  // namespace
}  // namespace hemine

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

// Acceptance gate. Each criterion prints one PASS/FAIL/SKIP line. Run with a
// criterion name to check just that one, or with no argument for all.

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hemine/change_attribution.h"
#include "hemine/dataset_io.h"
#include "hemine/he_metrics.h"
#include "hemine/method_parser.h"
#include "hemine/pipeline.h"
#include "support/git_fixture.h"
#include "support/tiny_repo.h"

namespace hemine {
namespace {

using Clock = std::chrono::steady_clock;
using namespace std::chrono_literals;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string mine_csv(const std::filesystem::path& repo) {
  MineConfig c;
  c.repo_path = repo;
  c.since = std::chrono::sys_days{2020y / 1 / 1};
  c.until = std::chrono::sys_days{2025y / 5 / 18};
  std::ostringstream out;
  write_csv(mine(c).rows, out);
  return out.str();
}

Outcome forgetting_curve() {
  const auto start = Clock::now();
  std::vector<std::string> failures;
  const double s1 = savings(1.0);
  if (s1 != 100.0) failures.push_back(fmt::format("savings(1)={}", s1));
  const double s10 = savings(10.0);
  if (!(std::abs(s10 - 64.7887) <= 1e-4)) {
    failures.push_back(fmt::format("savings(10)={:.6f}, want 64.7887+-1e-4", s10));
  }
  const double s100 = savings(100.0);
  if (!(std::abs(s100 - 43.6187) <= 1e-4)) {
    failures.push_back(
        fmt::format("savings(100)={:.6f}, want 43.6187+-1e-4", s100));
  }
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(1.0, 1e7);
  std::vector<double> ts(1000);
  for (double& t : ts) t = dist(rng);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(savings(ts[i]) < savings(ts[i - 1]))) {
      failures.push_back(fmt::format("not decreasing at t={}", ts[i]));
      break;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) failures.push_back(fmt::format("took {:.3f}s", elapsed));
  if (failures.empty()) {
    return {Verdict::kPass, fmt::format("{} samples, {:.3f}s", ts.size(), elapsed)};
  }
  std::string detail;
  for (const std::string& f : failures) detail += (detail.empty() ? "" : "; ") + f;
  return {Verdict::kFail, detail};
}

Outcome alertness_suite() {
  const auto start = Clock::now();
  constexpr std::array<double, 20> kScores = {
      0.0,  5.0,  23.5, 60.0, 82.0, 86.5, 77.3, 66.0, 76.5, 88.5,
      77.3, 57.3, 44.2, 48.2, 68.0, 82.0, 80.9, 99.2, 64.5, 17.3};
  constexpr std::array<int, 21> kEdges = {
      0,    330,  360,  450,  510,  570,  630,  690,  750,  810, 870,
      930,  990,  1050, 1110, 1170, 1230, 1290, 1350, 1410, 1440};
  const auto table = alertness_table();
  if (table.size() != kScores.size()) {
    return {Verdict::kFail, fmt::format("{} bins", table.size())};
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].score != kScores[i] || table[i].start_minute != kEdges[i] ||
        table[i].end_minute != kEdges[i + 1]) {
      return {Verdict::kFail, fmt::format("bin {} differs", i)};
    }
  }
  for (int minute = 0; minute < 1440; ++minute) {
    const auto hits = std::count_if(table.begin(), table.end(), [&](const auto& b) {
      return minute >= b.start_minute && minute < b.end_minute;
    });
    if (hits != 1) {
      return {Verdict::kFail, fmt::format("minute {} in {} bins", minute, hits)};
    }
    const auto bin = std::find_if(table.begin(), table.end(), [&](const auto& b) {
      return minute >= b.start_minute && minute < b.end_minute;
    });
    if (alertness_at(minute * 60) != bin->score) {
      return {Verdict::kFail, fmt::format("lookup wrong at minute {}", minute)};
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) return {Verdict::kFail, fmt::format("took {:.3f}s", elapsed)};
  return {Verdict::kPass, fmt::format("20 bins, 1440 minutes, {:.3f}s", elapsed)};
}

Outcome fixture_golden() {
  const auto start = Clock::now();
  testing::TempDir tmp;
  const auto repo = tmp.path() / "tiny";
  testing::build_tiny_repo(repo);
  const std::string csv = mine_csv(repo);
  const double elapsed = seconds_since(start);
  if (csv != slurp(testing::tiny_golden_csv())) {
    return {Verdict::kFail, "CSV differs from golden file"};
  }
  if (elapsed >= 10.0) return {Verdict::kFail, fmt::format("took {:.2f}s", elapsed)};
  return {Verdict::kPass, fmt::format("byte-identical, {:.2f}s", elapsed)};
}

Outcome partition_fuzz() {
  std::mt19937 rng(99);
  const std::vector<std::string> code = {"  x++;", "  f(\"/*\");", "  y = 1; /* c */",
                                         "#define Z 1", "  } else {"};
  const std::vector<std::string> comments = {"  /* c */", "// c", "  /* a", "  b */"};
  const std::vector<std::string> blanks = {"", "  ", "\t \t"};
  for (int iter = 0; iter < 1000; ++iter) {
    std::string src = "int f(void)\n{\n  if (1) {\n";
    CodeMetrics expected{0, 4, 0, 0};
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) {
      const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      if (kind == 0) {
        src += code[rng() % code.size()];
        ++expected.c2_code_lines;
      } else if (kind == 1) {
        // Open and close block comments in pairs so later lines are unaffected.
        const std::size_t pick = rng() % comments.size();
        if (pick >= 2) {
          src += comments[2] + "\n" + comments[3];
          expected.c4_comment_lines += 2;
          expected.c1_all_lines += 1;
        } else {
          src += comments[pick];
          ++expected.c4_comment_lines;
        }
      } else {
        src += blanks[rng() % blanks.size()];
        ++expected.c3_blank_lines;
      }
      src += '\n';
    }
    src += "  }\n}\n";
    expected.c1_all_lines += n + 5;
    expected.c2_code_lines += 1;
    const auto spans = extract_methods(src);
    if (spans.size() != 1) return {Verdict::kFail, "extraction failed:\n" + src};
    const CodeMetrics m = code_metrics(spans[0], classify_lines(src));
    if (m != expected ||
        m.c1_all_lines != m.c2_code_lines + m.c3_blank_lines + m.c4_comment_lines) {
      return {Verdict::kFail, "partition broken:\n" + src};
    }
  }
  return {Verdict::kPass, "1000 cases"};
}

Outcome attribution_conservation() {
  std::mt19937 rng(1234);
  constexpr int kLines = 80;
  auto random_spans = [&] {
    std::vector<MethodSpan> spans;
    int line = 1;
    int id = 0;
    while (true) {
      line += std::uniform_int_distribution<int>(0, 5)(rng);
      const int len = std::uniform_int_distribution<int>(1, 10)(rng);
      if (line + len - 1 > kLines) break;
      MethodSpan s;
      s.file_path = "f.c";
      // Shared names across sides make some methods move between versions.
      s.name = "m" + std::to_string(id++ % 7);
      s.start_line = line;
      s.end_line = line + len - 1;
      spans.push_back(s);
      line += len;
    }
    std::set<std::string> seen;
    std::erase_if(spans, [&](const MethodSpan& s) { return !seen.insert(s.name).second; });
    return spans;
  };
  auto random_lines = [&] {
    std::set<int> lines;
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < n; ++i) {
      lines.insert(std::uniform_int_distribution<int>(1, kLines)(rng));
    }
    return std::vector<int>(lines.begin(), lines.end());
  };

  CommitRecord commit;
  commit.commit_id = "c";
  commit.author = AuthorId{"a"};
  for (int iter = 0; iter < 1000; ++iter) {
    const auto pre = random_spans();
    const auto post = random_spans();
    FileDiff diff;
    diff.old_path = "f.c";
    diff.new_path = "f.c";
    const int nh = std::uniform_int_distribution<int>(1, 4)(rng);
    int hunk_added = 0;
    int hunk_deleted = 0;
    for (int i = 0; i < nh; ++i) {
      DiffHunk h;
      h.deleted_lines = random_lines();
      h.added_lines = random_lines();
      hunk_added += static_cast<int>(h.added_lines.size());
      hunk_deleted += static_cast<int>(h.deleted_lines.size());
      diff.hunks.push_back(std::move(h));
    }
    const auto events = attribute_changes(diff, pre, post, commit);

    // Brute force: walk every line number of every hunk.
    std::map<std::string, std::array<int, 3>> oracle;
    for (const DiffHunk& h : diff.hunks) {
      std::map<std::string, std::pair<int, int>> per;
      for (int line = 1; line <= kLines; ++line) {
        const bool del = std::count(h.deleted_lines.begin(), h.deleted_lines.end(), line);
        const bool add = std::count(h.added_lines.begin(), h.added_lines.end(), line);
        for (const MethodSpan& s : pre) {
          if (del && s.start_line <= line && line <= s.end_line) ++per[s.name].second;
        }
        for (const MethodSpan& s : post) {
          if (add && s.start_line <= line && line <= s.end_line) ++per[s.name].first;
        }
      }
      for (const auto& [name, ad] : per) {
        const int c = std::min(ad.first, ad.second);
        oracle[name][0] += ad.first - c;
        oracle[name][1] += ad.second - c;
        oracle[name][2] += c;
      }
    }
    std::erase_if(oracle, [](const auto& kv) {
      return kv.second[0] + kv.second[1] + kv.second[2] == 0;
    });

    if (events.size() != oracle.size()) {
      return {Verdict::kFail, fmt::format("case {}: {} events, oracle {}", iter,
                                          events.size(), oracle.size())};
    }
    for (const ChangeEvent& e : events) {
      const auto it = oracle.find(e.key.method_name);
      if (it == oracle.end() || e.added != it->second[0] ||
          e.deleted != it->second[1] || e.changed != it->second[2]) {
        return {Verdict::kFail, fmt::format("case {}: {} disagrees with oracle",
                                            iter, e.key.method_name)};
      }
      if (e.added + e.changed > hunk_added || e.deleted + e.changed > hunk_deleted) {
        return {Verdict::kFail, fmt::format("case {}: exceeds hunk tallies", iter)};
      }
    }
  }
  return {Verdict::kPass, "1000 cases"};
}

Outcome partition_and_conservation() {
  const Outcome partition = partition_fuzz();
  if (partition.verdict != Verdict::kPass) {
    return {Verdict::kFail, "partition: " + partition.detail};
  }
  const Outcome conservation = attribution_conservation();
  if (conservation.verdict != Verdict::kPass) {
    return {Verdict::kFail, "attribution: " + conservation.detail};
  }
  return {Verdict::kPass, "partition 1000 cases, attribution 1000 cases"};
}

Outcome determinism() {
  testing::TempDir tmp;
  const auto repo = tmp.path() / "tiny";
  testing::build_tiny_repo(repo);
  const std::string first = mine_csv(repo);
  const std::string second = mine_csv(repo);
  if (first != second) return {Verdict::kFail, "runs differ"};
  return {Verdict::kPass, fmt::format("{} bytes identical", first.size())};
}

// Needs a libuv clone named by HEMINE_LIBUV_REPO. Never gates.
Outcome libuv_diagnostic() {
  const char* path = std::getenv("HEMINE_LIBUV_REPO");
  if (path == nullptr || *path == '\0') {
    return {Verdict::kSkip, "set HEMINE_LIBUV_REPO to a libuv clone to run"};
  }
  const auto start = Clock::now();
  MineConfig c;
  c.repo_path = path;
  c.since = std::chrono::sys_days{2020y / 1 / 1};
  c.until = std::chrono::sys_days{2025y / 5 / 18};
  c.project_name = "libuv";
  const MineResult r = mine(c);
  const double elapsed = seconds_since(start);
  const int methods = r.summary.methods;
  const double pct =
      methods == 0 ? 0.0 : 100.0 * r.summary.defective_methods / methods;
  const bool ok = elapsed < 600.0 && std::abs(methods - 2073) <= 0.5 * 2073 &&
                  std::abs(pct - 25.7) <= 15.0;
  return {ok ? Verdict::kPass : Verdict::kFail,
          fmt::format("{:.1f}s, {} methods (ref 2073), {:.1f}% defective "
                      "(ref 25.7%), non-gating",
                      elapsed, methods, pct)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
  bool gating;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kAll = {
      {"forgetting_curve", forgetting_curve, true},
      {"alertness_table", alertness_suite, true},
      {"fixture_golden", fixture_golden, true},
      {"partition_and_conservation", partition_and_conservation, true},
      {"determinism", determinism, true},
      {"libuv_diagnostic", libuv_diagnostic, false},
  };
  return kAll;
}

}  // namespace
}  // namespace hemine

int main(int argc, char** argv) {
  using hemine::Verdict;
  const std::string only = argc > 1 ? argv[1] : "";
  int failures = 0;
  bool matched = false;
  for (const auto& c : hemine::criteria()) {
    if (!only.empty() && only != c.name) continue;
    matched = true;
    hemine::Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::kPass   ? "PASS"
                      : o.verdict == Verdict::kSkip ? "SKIP"
                                                    : "FAIL";
    fmt::print("{} {}: {}\n", tag, c.name, o.detail);
    if (o.verdict == Verdict::kFail && c.gating) ++failures;
  }
  if (!matched) {
    fmt::print(stderr, "unknown criterion: {}\n", only);
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

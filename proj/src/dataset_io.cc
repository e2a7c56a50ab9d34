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

#include "hemine/dataset_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/core.h>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include "hemine/error.h"

namespace hemine {
namespace {

constexpr std::string_view kHeader =
    "project,file_path,method_name,start_line,end_line,h1_authors,"
    "h2_added_loc,h3_changed_loc,h4_num_changes,h5_added_per_loc,"
    "h6_changed_per_change,h7_added_per_deleted,h8_deleted_loc,"
    "h9_deleted_per_loc,c1_all_lines,c2_code_lines,c3_blank_lines,"
    "c4_comment_lines,e1_memory_decay,e2_alertness,label";

constexpr size_t kNumColumns = 21;

void append_field(std::string& line, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    line += field;
    return;
  }
  line += '"';
  for (char c : field) {
    if (c == '"') line += '"';
    line += c;
  }
  line += '"';
}

template <typename T>
void check_present(const std::map<MethodKey, T>& m,
                   const std::map<MethodKey, MethodSnapshot>& methods,
                   std::string_view what) {
  for (const auto& [key, value] : m) {
    if (!methods.contains(key)) {
      throw KeyMismatch(std::string(what) + " references unknown method " +
                        key.file_path + ":" + key.method_name);
    }
  }
}

std::vector<std::vector<std::string>> parse_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      records.push_back(std::move(fields));
      fields.clear();
      field.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw IoFailure("unterminated quoted CSV field");
  if (field_started || !fields.empty()) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  return records;
}

template <typename T>
T parse_number(const std::string& s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoFailure("malformed CSV number: '" + s + "'");
  }
  return value;
}

}  // namespace

std::array<double, kNumFeatures> FeatureRow::features() const {
  return {static_cast<double>(history.h1_authors),
          static_cast<double>(history.h2_added_loc),
          static_cast<double>(history.h3_changed_loc),
          static_cast<double>(history.h4_num_changes),
          history.h5_added_per_loc,
          history.h6_changed_per_change,
          history.h7_added_per_deleted,
          static_cast<double>(history.h8_deleted_loc),
          history.h9_deleted_per_loc,
          static_cast<double>(code.c1_all_lines),
          static_cast<double>(code.c2_code_lines),
          static_cast<double>(code.c3_blank_lines),
          static_cast<double>(code.c4_comment_lines),
          he.e1_memory_decay,
          he.e2_alertness};
}

std::vector<FeatureRow> assemble(
    std::string_view project, const std::map<MethodKey, MethodSnapshot>& methods,
    const std::map<MethodKey, HistoryMetrics>& histories,
    const std::map<MethodKey, HEMetrics>& he_metrics,
    const std::map<MethodKey, int>& labels) {
  check_present(histories, methods, "history");
  check_present(he_metrics, methods, "HE metrics");
  check_present(labels, methods, "label");

  std::vector<FeatureRow> rows;
  rows.reserve(methods.size());
  for (const auto& [key, snap] : methods) {
    FeatureRow row;
    row.project = std::string(project);
    row.file_path = key.file_path;
    row.method_name = key.method_name;
    row.start_line = snap.start_line;
    row.end_line = snap.end_line;
    row.code = snap.code;
    if (auto it = histories.find(key); it != histories.end()) {
      row.history = it->second;
    }
    if (auto it = he_metrics.find(key); it != he_metrics.end()) {
      row.he = it->second;
    }
    if (auto it = labels.find(key); it != labels.end()) row.label = it->second;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const FeatureRow& a, const FeatureRow& b) {
    return std::tie(a.file_path, a.start_line, a.method_name) <
           std::tie(b.file_path, b.start_line, b.method_name);
  });
  return rows;
}

std::string_view csv_header() { return kHeader; }

std::string format_decimal(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("cannot serialize non-finite value");
  }
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 6);
  if (ec != std::errc()) throw DomainError("value too large to serialize");
  std::string out(buf, ptr);
  out.erase(out.find_last_not_of('0') + 1);
  if (out.back() == '.') out.pop_back();
  if (out == "-0") out = "0";
  return out;
}

std::size_t write_csv(std::span<const FeatureRow> rows, std::ostream& out) {
  std::string text(kHeader);
  text += '\n';
  for (const FeatureRow& r : rows) {
    std::string line;
    append_field(line, r.project);
    line += ',';
    append_field(line, r.file_path);
    line += ',';
    append_field(line, r.method_name);
    const HistoryMetrics& h = r.history;
    const CodeMetrics& c = r.code;
    line += fmt::format(",{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                        r.start_line, r.end_line, h.h1_authors, h.h2_added_loc,
                        h.h3_changed_loc, h.h4_num_changes,
                        format_decimal(h.h5_added_per_loc),
                        format_decimal(h.h6_changed_per_change),
                        format_decimal(h.h7_added_per_deleted),
                        h.h8_deleted_loc, format_decimal(h.h9_deleted_per_loc),
                        c.c1_all_lines, c.c2_code_lines, c.c3_blank_lines,
                        c.c4_comment_lines, format_decimal(r.he.e1_memory_decay),
                        format_decimal(r.he.e2_alertness), r.label);
    text += line;
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoFailure("failed writing CSV output");
  return text.size();
}

std::vector<FeatureRow> read_csv(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  auto records = parse_records(text);
  if (records.empty() || records.front().size() != kNumColumns) {
    throw IoFailure("CSV header missing or malformed");
  }
  std::string header;
  for (size_t i = 0; i < records.front().size(); ++i) {
    if (i > 0) header += ',';
    header += records.front()[i];
  }
  if (header != kHeader) throw IoFailure("unexpected CSV header: " + header);

  std::vector<FeatureRow> rows;
  for (size_t n = 1; n < records.size(); ++n) {
    const auto& f = records[n];
    if (f.size() != kNumColumns) {
      throw IoFailure("CSV record " + std::to_string(n) + " has " +
                      std::to_string(f.size()) + " fields");
    }
    FeatureRow r;
    r.project = f[0];
    r.file_path = f[1];
    r.method_name = f[2];
    r.start_line = parse_number<int>(f[3]);
    r.end_line = parse_number<int>(f[4]);
    r.history.h1_authors = parse_number<int>(f[5]);
    r.history.h2_added_loc = parse_number<int>(f[6]);
    r.history.h3_changed_loc = parse_number<int>(f[7]);
    r.history.h4_num_changes = parse_number<int>(f[8]);
    r.history.h5_added_per_loc = parse_number<double>(f[9]);
    r.history.h6_changed_per_change = parse_number<double>(f[10]);
    r.history.h7_added_per_deleted = parse_number<double>(f[11]);
    r.history.h8_deleted_loc = parse_number<int>(f[12]);
    r.history.h9_deleted_per_loc = parse_number<double>(f[13]);
    r.code.c1_all_lines = parse_number<int>(f[14]);
    r.code.c2_code_lines = parse_number<int>(f[15]);
    r.code.c3_blank_lines = parse_number<int>(f[16]);
    r.code.c4_comment_lines = parse_number<int>(f[17]);
    r.he.e1_memory_decay = parse_number<double>(f[18]);
    r.he.e2_alertness = parse_number<double>(f[19]);
    r.label = parse_number<int>(f[20]);
    rows.push_back(std::move(r));
  }
  return rows;
}

ProjectSummary summarize(std::string_view project,
                         std::chrono::sys_days start_date, int commits,
                         std::span<const FeatureRow> rows) {
  ProjectSummary s;
  s.project = std::string(project);
  s.start_date = format_date(start_date);
  s.commits = commits;
  std::set<std::string_view> files;
  for (const FeatureRow& r : rows) {
    files.insert(r.file_path);
    s.defective_methods += r.label;
    s.loc += r.code.c2_code_lines;
  }
  s.files = static_cast<int>(files.size());
  s.methods = static_cast<int>(rows.size());
  return s;
}

std::string defective_percent(const ProjectSummary& summary) {
  const double pct = summary.methods == 0
                         ? 0.0
                         : 100.0 * summary.defective_methods / summary.methods;
  return fmt::format("{:.1f}%", pct);
}

std::string format_summary_text(const ProjectSummary& s) {
  std::string out;
  out += fmt::format("{:<18} {}\n", "Project", s.project);
  out += fmt::format("{:<18} {}\n", "Start Date", s.start_date);
  out += fmt::format("{:<18} {}\n", "Commits", s.commits);
  out += fmt::format("{:<18} {}\n", "Files", s.files);
  out += fmt::format("{:<18} {}\n", "Methods", s.methods);
  out += fmt::format("{:<18} {} ({})\n", "Defective Methods",
                     s.defective_methods, defective_percent(s));
  out += fmt::format("{:<18} {}\n", "LOC", s.loc);
  return out;
}

std::string format_summary_csv(const ProjectSummary& s) {
  std::string out =
      "project,start_date,commits,files,methods,defective_methods,loc\n";
  append_field(out, s.project);
  out += fmt::format(",{},{},{},{},{},{}\n", s.start_date, s.commits, s.files,
                     s.methods, s.defective_methods, s.loc);
  return out;
}

}  // namespace hemine

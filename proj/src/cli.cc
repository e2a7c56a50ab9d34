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

#include "hemine/cli.h"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include "hemine/error.h"
#include "hemine/he_metrics.h"
#include "hemine/pipeline.h"

namespace hemine::cli {
namespace {

struct Flags {
  std::string repo;
  std::string since;
  std::string until;
  std::string out;
  std::string keywords;
  std::string project;
  std::string log_base = "10";
  double curve_c = 1.25;
  double curve_k = 1.84;
  std::string format = "text";
};

void add_mine_flags(CLI::App& cmd, Flags& f, bool out_required) {
  cmd.add_option("--repo", f.repo, "Path to the git repository")->required();
  cmd.add_option("--since", f.since, "First day of the window (YYYY-MM-DD)")
      ->required();
  cmd.add_option("--until", f.until, "Last day of the window (YYYY-MM-DD)")
      ->required();
  auto* out = cmd.add_option("--out", f.out,
                             out_required ? "Output CSV dataset path"
                                          : "Also write the summary CSV here");
  if (out_required) out->required();
  cmd.add_option("--keywords", f.keywords,
                 "Bug-fix keyword file (one regex per line, # comments)");
  cmd.add_option("--project", f.project,
                 "Project name (default: repository directory name)");
  cmd.add_option("--log-base", f.log_base, "Forgetting-curve log base")
      ->check(CLI::IsMember({"10", "e"}))
      ->capture_default_str();
  cmd.add_option("--curve-c", f.curve_c, "Forgetting-curve exponent c")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--curve-k", f.curve_k, "Forgetting-curve scale k")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

MineConfig to_config(const Flags& f) {
  MineConfig c;
  c.repo_path = f.repo;
  c.since = parse_date(f.since);
  c.until = parse_date(f.until);
  if (!f.keywords.empty()) c.keywords_path = f.keywords;
  if (!f.project.empty()) c.project_name = f.project;
  c.curve.exponent = f.curve_c;
  c.curve.scale = f.curve_k;
  c.curve.log_base = f.log_base == "e" ? LogBase::kE : LogBase::kTen;
  // Fail on a reversed window before touching the repository.
  DateWindow(c.since, c.until);
  return c;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + path + " for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.close();
  if (!file) throw IoFailure("failed writing " + path);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::permissions(path,
                  fs::perms::owner_read | fs::perms::owner_write |
                      fs::perms::group_read | fs::perms::others_read,
                  ec);
}

void report_diagnostics(const MineDiagnostics& d, std::ostream& err) {
  err << fmt::format(
      "commits={} bugfix_commits={} events={} revisions_parsed={} "
      "duplicate_names_dropped={} unbalanced_files={} clock_skew={}\n",
      d.commits, d.bugfix_commits, d.change_events, d.file_revisions_parsed,
      d.duplicate_names_dropped, d.unbalanced_files, d.clock_skew);
}

int run_mine(const Flags& f, std::ostream& err) {
  const MineResult result = mine(to_config(f));
  std::ostringstream csv;
  write_csv(result.rows, csv);
  write_file(f.out, csv.str());
  err << format_summary_text(result.summary);
  report_diagnostics(result.diagnostics, err);
  return kExitOk;
}

int run_summarize(const Flags& f, std::ostream& out, std::ostream& err) {
  const MineResult result = mine(to_config(f));
  if (f.format == "csv") {
    out << format_summary_csv(result.summary);
  } else {
    out << format_summary_text(result.summary);
  }
  if (!f.out.empty()) write_file(f.out, format_summary_csv(result.summary));
  report_diagnostics(result.diagnostics, err);
  return kExitOk;
}

void dump_alertness_table(std::ostream& out) {
  out << "start  end    score\n";
  for (const AlertnessBin& bin : alertness_table()) {
    out << fmt::format("{:02}:{:02}  {:02}:{:02}  {:.1f}\n",
                       bin.start_minute / 60, bin.start_minute % 60,
                       bin.end_minute / 60, bin.end_minute % 60, bin.score);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mine method-level defect-prediction features from a git "
               "repository",
               "hemine"};
  app.require_subcommand(1);
  Flags flags;

  auto* mine_cmd =
      app.add_subcommand("mine", "Run the pipeline and write the CSV dataset");
  add_mine_flags(*mine_cmd, flags, true);

  auto* summarize_cmd =
      app.add_subcommand("summarize", "Run the pipeline and print the project summary");
  add_mine_flags(*summarize_cmd, flags, false);
  summarize_cmd->add_option("--format", flags.format, "Summary output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  auto* dump_cmd = app.add_subcommand(
      "dump-alertness-table", "Print the time-of-day alertness table");
  auto* version_cmd = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);
    }
    err << "hemine: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return run_mine(flags, err);
    if (summarize_cmd->parsed()) return run_summarize(flags, out, err);
    if (dump_cmd->parsed()) {
      dump_alertness_table(out);
      return kExitOk;
    }
    if (version_cmd->parsed()) {
      out << "hemine " << kVersion << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "hemine: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hemine: " << e.what() << "\n";
    return kExitPipelineError;
  }
  return kExitUsage;
}

}  // namespace hemine::cli

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

#include "hemine/pipeline.h"

#include <tbb/blocked_range.h>
#include <tbb/enumerable_thread_specific.h>
#include <tbb/global_control.h>
#include <tbb/parallel_for.h>

#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "hemine/labeling.h"
#include "hemine/method_parser.h"
#include "hemine/repo_ingest.h"

namespace hemine {
namespace {

struct ParsedRevision {
  std::vector<MethodSpan> methods;
  std::vector<LineClass> classes;
};

// Per-thread state: a cat-file process and a small cache of parsed blobs.
// Consecutive commits often read the same blob as post- and pre-image.
class RevisionParser {
 public:
  explicit RevisionParser(const RepoHandle& repo) : reader_(repo) {}

  std::shared_ptr<const ParsedRevision> parse(const std::string& blob_id) {
    if (auto it = cache_.find(blob_id); it != cache_.end()) return it->second;
    const std::string text = reader_.read(blob_id);
    ParseDiagnostics diag;
    auto parsed = std::make_shared<ParsedRevision>();
    parsed->methods = extract_methods(text, diag);
    parsed->classes = classify_lines(text);
    stats.file_revisions_parsed++;
    stats.duplicate_names_dropped += diag.duplicate_names_dropped;
    if (diag.unbalanced_at_eof) stats.unbalanced_files++;
    if (cache_.size() >= kCacheLimit) cache_.clear();
    cache_.emplace(blob_id, parsed);
    return parsed;
  }

  MineDiagnostics stats;

 private:
  static constexpr size_t kCacheLimit = 512;
  BlobReader reader_;
  std::unordered_map<std::string, std::shared_ptr<const ParsedRevision>> cache_;
};

struct Version {
  MethodKey key;
  MethodSnapshot snapshot;
};

struct CommitWork {
  std::vector<ChangeEvent> events;
  std::vector<Version> versions;  // latest known shape of each touched method
  std::vector<std::pair<std::string, std::string>> renames;
};

MethodSnapshot snapshot_of(const MethodSpan& span, const ParsedRevision& rev) {
  return {span.start_line, span.end_line, code_metrics(span, rev.classes)};
}

const MethodSpan* find_by_name(const std::vector<MethodSpan>& spans,
                               const std::string& name) {
  for (const MethodSpan& s : spans) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

CommitWork process_commit(const RepoHandle& repo, const CommitRecord& commit,
                          RevisionParser& parser) {
  static const ParsedRevision kEmpty;
  CommitWork work;
  for (const FileDiff& diff : diff_commit(repo, commit)) {
    if (diff.is_rename && diff.old_path && diff.new_path) {
      work.renames.emplace_back(*diff.old_path, *diff.new_path);
    }
    if (diff.hunks.empty()) continue;
    auto side = [&](const std::optional<std::string>& path,
                    const std::optional<std::string>& blob) {
      return path && blob && is_c_source(*path)
                 ? parser.parse(*blob)
                 : std::shared_ptr<const ParsedRevision>(
                       std::shared_ptr<const ParsedRevision>(), &kEmpty);
    };
    const auto pre = side(diff.old_path, diff.old_blob);
    const auto post = side(diff.new_path, diff.new_blob);
    auto events = attribute_changes(diff, pre->methods, post->methods, commit);
    for (const ChangeEvent& e : events) {
      if (const MethodSpan* s = find_by_name(post->methods, e.key.method_name)) {
        work.versions.push_back({e.key, snapshot_of(*s, *post)});
      } else if (const MethodSpan* s =
                     find_by_name(pre->methods, e.key.method_name)) {
        work.versions.push_back({e.key, snapshot_of(*s, *pre)});
      }
    }
    work.events.insert(work.events.end(),
                       std::make_move_iterator(events.begin()),
                       std::make_move_iterator(events.end()));
  }
  return work;
}

void merge_stats(MineDiagnostics& into, const MineDiagnostics& from) {
  into.file_revisions_parsed += from.file_revisions_parsed;
  into.duplicate_names_dropped += from.duplicate_names_dropped;
  into.unbalanced_files += from.unbalanced_files;
}

// Rewrites every path to the name the file carries at the end of the window.
// Walks commits newest-first so a path is only aliased for commits older than
// the rename that retired it.
void chase_renames(std::vector<CommitWork>& work) {
  std::unordered_map<std::string, std::string> alias;
  auto resolve = [&](const std::string& path) -> const std::string& {
    auto it = alias.find(path);
    return it == alias.end() ? path : it->second;
  };
  for (auto it = work.rbegin(); it != work.rend(); ++it) {
    for (ChangeEvent& e : it->events) e.key.file_path = resolve(e.key.file_path);
    for (Version& v : it->versions) v.key.file_path = resolve(v.key.file_path);
    for (const auto& [from, to] : it->renames) {
      const std::string target = resolve(to);
      alias[from] = target;
    }
  }
}

}  // namespace

std::string default_project_name(const std::filesystem::path& repo_path) {
  std::filesystem::path p = repo_path.lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  std::string name = p.filename().string();
  if (name.ends_with(".git") && name.size() > 4) name.resize(name.size() - 4);
  return name;
}

MineResult mine(const MineConfig& config) {
  const DateWindow window(config.since, config.until);
  validate(config.curve);
  const KeywordRuleSet rules = config.keywords_path
                                   ? KeywordRuleSet::from_file(*config.keywords_path)
                                   : KeywordRuleSet::defaults();
  const std::string project = config.project_name
                                  ? *config.project_name
                                  : default_project_name(config.repo_path);

  std::optional<tbb::global_control> limit;
  if (config.max_threads > 0) {
    limit.emplace(tbb::global_control::max_allowed_parallelism,
                  static_cast<size_t>(config.max_threads));
  }

  const RepoHandle repo = open_repository(config.repo_path);
  const std::vector<CommitRecord> commits = list_commits(repo, window);

  MineResult result;
  MineDiagnostics& diag = result.diagnostics;
  diag.commits = static_cast<int>(commits.size());

  tbb::enumerable_thread_specific<std::unique_ptr<RevisionParser>> parsers;
  auto parser_for_thread = [&]() -> RevisionParser& {
    auto& p = parsers.local();
    if (!p) p = std::make_unique<RevisionParser>(repo);
    return *p;
  };

  std::vector<CommitWork> work(commits.size());
  tbb::parallel_for(tbb::blocked_range<size_t>(0, commits.size()),
                    [&](const tbb::blocked_range<size_t>& r) {
                      RevisionParser& parser = parser_for_thread();
                      for (size_t i = r.begin(); i != r.end(); ++i) {
                        work[i] = process_commit(repo, commits[i], parser);
                      }
                    });
  chase_renames(work);

  // Events stay in commit order, which is (authored_at, commit_id).
  std::map<MethodKey, std::vector<ChangeEvent>> events_by_method;
  std::map<MethodKey, MethodSnapshot> methods;
  std::vector<ChangeEvent> all_events;
  for (CommitWork& w : work) {
    for (Version& v : w.versions) methods[v.key] = v.snapshot;
    for (ChangeEvent& e : w.events) {
      events_by_method[e.key].push_back(e);
      all_events.push_back(std::move(e));
    }
  }
  diag.change_events = static_cast<int>(all_events.size());

  // Methods alive at the window end take their final shape from that tree.
  if (!commits.empty()) {
    const auto files = list_c_files(repo, commits.back().commit_id);
    std::vector<std::vector<Version>> per_file(files.size());
    tbb::parallel_for(
        tbb::blocked_range<size_t>(0, files.size()),
        [&](const tbb::blocked_range<size_t>& r) {
          RevisionParser& parser = parser_for_thread();
          for (size_t i = r.begin(); i != r.end(); ++i) {
            const auto rev = parser.parse(files[i].blob_id);
            for (const MethodSpan& s : rev->methods) {
              per_file[i].push_back(
                  {MethodKey{files[i].path, s.name}, snapshot_of(s, *rev)});
            }
          }
        });
    for (auto& versions : per_file) {
      for (Version& v : versions) methods[v.key] = v.snapshot;
    }
  }
  for (const auto& p : parsers) {
    if (p) merge_stats(diag, p->stats);
  }

  std::map<MethodKey, HistoryMetrics> histories;
  std::map<MethodKey, HEMetrics> he;
  DecayDiagnostics decay_diag;
  for (const auto& [key, events] : events_by_method) {
    histories[key] = fold_history(events, methods.at(key).code.c2_code_lines);
    he[key] = method_he_metrics(events, config.curve, &decay_diag);
  }
  diag.clock_skew = decay_diag.clock_skew;

  std::set<std::string, std::less<>> bugfix_commits;
  for (const CommitRecord& c : commits) {
    if (is_bugfix(c.message, rules)) bugfix_commits.insert(c.commit_id);
  }
  diag.bugfix_commits = static_cast<int>(bugfix_commits.size());

  std::set<MethodKey> known;
  for (const auto& [key, snap] : methods) known.insert(key);
  const auto labels = label_methods(known, all_events, bugfix_commits);

  result.rows = assemble(project, methods, histories, he, labels);
  result.summary = summarize(project, config.since, diag.commits, result.rows);
  return result;
}

}  // namespace hemine

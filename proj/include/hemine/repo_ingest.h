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

// Read-only access to a Git repository: commit listing, per-commit diffs, and
// blob contents. All access goes through the git command-line client.

#ifndef HEMINE_REPO_INGEST_H_
#define HEMINE_REPO_INGEST_H_

#include <compare>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemine/timestamp.h"

namespace hemine {

// Lowercased author e-mail, or lowercased name when the e-mail is empty.
struct AuthorId {
  std::string key;

  static AuthorId from(std::string_view email, std::string_view name);

  friend auto operator<=>(const AuthorId&, const AuthorId&) = default;
};

// Line numbers are 1-based. added_lines are new-side numbers, deleted_lines
// old-side numbers.
struct DiffHunk {
  int old_start = 0;
  int old_count = 0;
  int new_start = 0;
  int new_count = 0;
  std::vector<int> added_lines;
  std::vector<int> deleted_lines;
};

struct FileDiff {
  std::optional<std::string> old_path;  // absent for added files
  std::optional<std::string> new_path;  // absent for deleted files
  std::optional<std::string> old_blob;
  std::optional<std::string> new_blob;
  std::vector<DiffHunk> hunks;
  bool is_rename = false;

  // The path the file has after the commit, or its old path when deleted.
  const std::string& path() const { return new_path ? *new_path : *old_path; }
};

struct CommitRecord {
  std::string commit_id;
  std::optional<std::string> parent_id;  // first parent; absent for roots
  AuthorId author;
  Timestamp authored_at;
  std::string message;
  bool is_merge = false;
  std::vector<FileDiff> diffs;
};

class RepoHandle {
 public:
  const std::filesystem::path& path() const { return path_; }

  // HEAD commit id, or nullopt for a repository without commits.
  std::optional<std::string> head() const;

  const std::string& empty_tree_id() const { return empty_tree_; }

 private:
  friend RepoHandle open_repository(const std::filesystem::path& path);

  std::filesystem::path path_;
  std::string empty_tree_;
};

// Throws NotARepository when `path` is not the top level of a work tree or a
// bare repository, IoFailure when it does not exist or git cannot run.
RepoHandle open_repository(const std::filesystem::path& path);

// First-parent history of HEAD restricted to `window` (authored time, UTC),
// merges dropped, ordered oldest-first by (authored instant, commit id).
// Diffs are not populated.
std::vector<CommitRecord> list_commits(const RepoHandle& repo,
                                       const DateWindow& window);

// Diff against the first parent (or the empty tree for roots) with rename
// detection at 50% similarity. Only .c/.h files are returned.
std::vector<FileDiff> diff_commit(const RepoHandle& repo,
                                  const CommitRecord& commit);

// Parses the patch output of `git diff-tree -p --full-index -U<n>`. Exposed
// for tests; does not filter by extension.
std::vector<FileDiff> parse_patch(std::string_view patch);

bool is_c_source(std::string_view path);

// Streams blob contents through one long-lived `git cat-file --batch`.
// Not thread-safe; use one reader per thread.
class BlobReader {
 public:
  explicit BlobReader(const RepoHandle& repo);
  ~BlobReader();
  BlobReader(const BlobReader&) = delete;
  BlobReader& operator=(const BlobReader&) = delete;

  // Throws IoFailure when the object is missing.
  std::string read(std::string_view object_id);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct TreeEntry {
  std::string path;
  std::string blob_id;
};

// Regular .c/.h files in the tree of `commit_id`, sorted by path.
std::vector<TreeEntry> list_c_files(const RepoHandle& repo,
                                    std::string_view commit_id);

}  // namespace hemine

#endif  // HEMINE_REPO_INGEST_H_

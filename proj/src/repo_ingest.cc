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

#include "hemine/repo_ingest.h"

#include <algorithm>
#include <boost/process.hpp>
#include <cctype>
#include <charconv>
#include <set>

#include "git_command.h"
#include "hemine/error.h"

namespace bp = boost::process;

namespace hemine {

using internal::run_git;
using internal::run_git_streaming;

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim_newlines(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t begin = 0;
  while (true) {
    const size_t pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(begin));
      return parts;
    }
    parts.push_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

// Undoes git's C-style quoting of unusual path names.
std::string unquote_path(std::string_view s) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
    return std::string(s);
  }
  s = s.substr(1, s.size() - 2);
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    const char c = s[++i];
    switch (c) {
      case 'a': out += '\a'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 't': out += '\t'; break;
      case 'v': out += '\v'; break;
      default:
        if (c >= '0' && c <= '7' && i + 2 < s.size()) {
          out += static_cast<char>(((c - '0') << 6) | ((s[i + 1] - '0') << 3) |
                                   (s[i + 2] - '0'));
          i += 2;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// "a/foo.c" -> "foo.c"; "/dev/null" -> nullopt.
std::optional<std::string> strip_side_prefix(std::string_view raw) {
  if (!raw.empty() && raw.back() == '\t') raw.remove_suffix(1);
  std::string path = unquote_path(raw);
  if (path == "/dev/null") return std::nullopt;
  if (path.size() >= 2 && (path[0] == 'a' || path[0] == 'b') &&
      path[1] == '/') {
    path.erase(0, 2);
  }
  return path;
}

// Recovers the path from "diff --git a/P b/P" when both sides are equal.
std::optional<std::string> path_from_git_header(std::string_view rest) {
  if (!rest.empty() && rest.front() == '"') {
    const size_t close = rest.find("\" ", 1);
    if (close == std::string_view::npos) return std::nullopt;
    return strip_side_prefix(rest.substr(0, close + 1));
  }
  if (rest.size() < 5 || (rest.size() - 5) % 2 != 0) return std::nullopt;
  const size_t len = (rest.size() - 5) / 2;
  return std::string(rest.substr(2, len));
}

int parse_count(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoFailure("malformed hunk header field: " + std::string(s));
  }
  return v;
}

// "-12,3" -> {12, 3}; "-12" -> {12, 1}
std::pair<int, int> parse_range(std::string_view s) {
  s.remove_prefix(1);
  const size_t comma = s.find(',');
  if (comma == std::string_view::npos) return {parse_count(s), 1};
  return {parse_count(s.substr(0, comma)), parse_count(s.substr(comma + 1))};
}

DiffHunk parse_hunk_header(std::string_view line) {
  // @@ -a,b +c,d @@ optional section heading
  const auto fields = split(line, ' ');
  if (fields.size() < 4 || fields[1].empty() || fields[1][0] != '-' ||
      fields[2].empty() || fields[2][0] != '+') {
    throw IoFailure("malformed hunk header: " + std::string(line));
  }
  DiffHunk hunk;
  std::tie(hunk.old_start, hunk.old_count) = parse_range(fields[1]);
  std::tie(hunk.new_start, hunk.new_count) = parse_range(fields[2]);
  return hunk;
}

void parse_index_line(std::string_view rest, FileDiff& diff) {
  // "<old>..<new> <mode>" or "<old>..<new>"
  const size_t dots = rest.find("..");
  if (dots == std::string_view::npos) return;
  std::string_view new_part = rest.substr(dots + 2);
  new_part = new_part.substr(0, new_part.find(' '));
  diff.old_blob = std::string(rest.substr(0, dots));
  diff.new_blob = std::string(new_part);
}

bool all_zero(const std::optional<std::string>& oid) {
  return oid && std::all_of(oid->begin(), oid->end(),
                            [](char c) { return c == '0'; });
}

}  // namespace

AuthorId AuthorId::from(std::string_view email, std::string_view name) {
  return AuthorId{to_lower(email.empty() ? name : email)};
}

bool is_c_source(std::string_view path) {
  return path.ends_with(".c") || path.ends_with(".h");
}

std::optional<std::string> RepoHandle::head() const {
  std::string out;
  const int rc = run_git_streaming(
      path_, {"rev-parse", "--verify", "-q", "HEAD^{commit}"},
      [&](std::istream& in) { std::getline(in, out); });
  if (rc != 0 || out.empty()) return std::nullopt;
  return out;
}

RepoHandle open_repository(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw IoFailure("path does not exist: " + path.string());
  }
  if (!std::filesystem::is_directory(path, ec)) {
    throw NotARepository("not a directory: " + path.string());
  }
  const auto canonical = std::filesystem::canonical(path, ec);
  if (ec) throw IoFailure("cannot resolve " + path.string());

  std::vector<std::string> lines;
  const int rc = run_git_streaming(
      canonical,
      {"rev-parse", "--is-bare-repository", "--absolute-git-dir",
       "--show-toplevel"},
      [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
      });
  if (rc != 0 || lines.size() < 2) {
    throw NotARepository("not a git repository: " + path.string());
  }
  const bool bare = lines[0] == "true";
  // A plain directory nested inside some other work tree is not a repository
  // in its own right.
  const std::filesystem::path top =
      bare ? std::filesystem::path(lines[1])
           : (lines.size() > 2 ? std::filesystem::path(lines[2])
                               : std::filesystem::path());
  if (std::filesystem::canonical(top, ec) != canonical) {
    throw NotARepository("not a git repository: " + path.string());
  }

  RepoHandle handle;
  handle.path_ = canonical;
  handle.empty_tree_ = std::string(trim_newlines(
      run_git(canonical, {"hash-object", "-t", "tree", "/dev/null"})));
  return handle;
}

std::vector<CommitRecord> list_commits(const RepoHandle& repo,
                                       const DateWindow& window) {
  std::vector<CommitRecord> commits;
  if (!repo.head()) return commits;

  const int rc = run_git_streaming(
      repo.path(),
      {"log", "--first-parent", "--encoding=UTF-8", "--date=raw",
       "--format=%x1e%H%x00%P%x00%ae%x00%an%x00%ad%x00%B", "HEAD"},
      [&](std::istream& in) {
        std::string record;
        std::set<std::string, std::less<>> seen;
        while (std::getline(in, record, '\x1e')) {
          if (record.empty()) continue;
          const auto fields = split(record, '\0');
          if (fields.size() < 6) {
            throw IoFailure("unexpected git log record");
          }
          CommitRecord c;
          c.authored_at = parse_git_raw_date(fields[4]);
          if (!window.contains(c.authored_at)) continue;
          const auto parents = split(fields[1], ' ');
          c.is_merge = parents.size() > 1;
          if (c.is_merge) continue;
          c.commit_id = std::string(fields[0]);
          if (!seen.insert(c.commit_id).second) continue;
          if (!fields[1].empty()) c.parent_id = std::string(parents[0]);
          c.author = AuthorId::from(fields[2], fields[3]);
          // The message may itself contain NUL bytes; rejoin the tail.
          std::string_view msg(record);
          size_t offset = 0;
          for (int i = 0; i < 5; ++i) offset += fields[i].size() + 1;
          c.message = std::string(trim_newlines(msg.substr(offset)));
          commits.push_back(std::move(c));
        }
      });
  if (rc != 0) throw IoFailure("git log failed in " + repo.path().string());

  std::sort(commits.begin(), commits.end(),
            [](const CommitRecord& a, const CommitRecord& b) {
              if (a.authored_at.unix_seconds != b.authored_at.unix_seconds) {
                return a.authored_at.unix_seconds < b.authored_at.unix_seconds;
              }
              return a.commit_id < b.commit_id;
            });
  return commits;
}

std::vector<FileDiff> parse_patch(std::string_view patch) {
  std::vector<FileDiff> diffs;
  FileDiff* current = nullptr;
  bool is_new = false;
  bool is_deleted = false;
  std::optional<std::string> header_path;
  DiffHunk* hunk = nullptr;
  int old_remaining = 0;
  int new_remaining = 0;
  int old_line = 0;
  int new_line = 0;

  auto finish_file = [&] {
    if (current == nullptr) return;
    if (!current->old_path && !is_new) current->old_path = header_path;
    if (!current->new_path && !is_deleted) current->new_path = header_path;
    if (is_new) current->old_path.reset();
    if (is_deleted) current->new_path.reset();
    if (all_zero(current->old_blob)) current->old_blob.reset();
    if (all_zero(current->new_blob)) current->new_blob.reset();
    if (!current->old_path && !current->new_path) diffs.pop_back();
    current = nullptr;
  };

  size_t pos = 0;
  while (pos < patch.size()) {
    size_t eol = patch.find('\n', pos);
    if (eol == std::string_view::npos) eol = patch.size();
    const std::string_view line = patch.substr(pos, eol - pos);
    pos = eol + 1;

    if (hunk != nullptr && (old_remaining > 0 || new_remaining > 0)) {
      const char op = line.empty() ? ' ' : line[0];
      if (op == '+') {
        hunk->added_lines.push_back(new_line++);
        --new_remaining;
      } else if (op == '-') {
        hunk->deleted_lines.push_back(old_line++);
        --old_remaining;
      } else if (op == ' ') {
        ++old_line;
        ++new_line;
        --old_remaining;
        --new_remaining;
      }
      // '\' marks "No newline at end of file" and consumes no line.
      continue;
    }

    if (starts_with(line, "diff --git ")) {
      finish_file();
      diffs.emplace_back();
      current = &diffs.back();
      hunk = nullptr;
      is_new = is_deleted = false;
      header_path = path_from_git_header(line.substr(11));
      continue;
    }
    if (current == nullptr) continue;

    if (starts_with(line, "@@ ")) {
      current->hunks.push_back(parse_hunk_header(line));
      hunk = &current->hunks.back();
      old_remaining = hunk->old_count;
      new_remaining = hunk->new_count;
      old_line = hunk->old_start;
      new_line = hunk->new_start;
    } else if (starts_with(line, "--- ")) {
      current->old_path = strip_side_prefix(line.substr(4));
    } else if (starts_with(line, "+++ ")) {
      current->new_path = strip_side_prefix(line.substr(4));
    } else if (starts_with(line, "rename from ")) {
      current->old_path = unquote_path(line.substr(12));
      current->is_rename = true;
    } else if (starts_with(line, "rename to ")) {
      current->new_path = unquote_path(line.substr(10));
      current->is_rename = true;
    } else if (starts_with(line, "new file mode ")) {
      is_new = true;
    } else if (starts_with(line, "deleted file mode ")) {
      is_deleted = true;
    } else if (starts_with(line, "index ")) {
      parse_index_line(line.substr(6), *current);
    }
  }
  finish_file();
  return diffs;
}

std::vector<FileDiff> diff_commit(const RepoHandle& repo,
                                  const CommitRecord& commit) {
  const std::string base =
      commit.parent_id ? *commit.parent_id : repo.empty_tree_id();
  const std::string patch =
      run_git(repo.path(),
              {"diff-tree", "-r", "-p", "--no-color", "--no-ext-diff",
               "--no-textconv", "--full-index", "--find-renames=50%",
               "--diff-algorithm=myers", "--ignore-submodules", "-U0", base,
               commit.commit_id});
  std::vector<FileDiff> diffs = parse_patch(patch);
  std::erase_if(diffs, [](const FileDiff& d) {
    return !((d.old_path && is_c_source(*d.old_path)) ||
             (d.new_path && is_c_source(*d.new_path)));
  });
  return diffs;
}

struct BlobReader::Impl {
  bp::opstream requests;
  bp::ipstream responses;
  bp::child child;
};

BlobReader::BlobReader(const RepoHandle& repo) : impl_(new Impl) {
  std::vector<std::string> args = internal::git_base_args(repo.path());
  args.push_back("cat-file");
  args.push_back("--batch");
  try {
    impl_->child = bp::child(bp::search_path("git"), args,
                             bp::std_in < impl_->requests,
                             bp::std_out > impl_->responses,
                             bp::std_err > bp::null);
  } catch (const bp::process_error& e) {
    throw IoFailure(std::string("cannot start git cat-file: ") + e.what());
  }
}

BlobReader::~BlobReader() {
  impl_->requests.pipe().close();
  std::error_code ec;
  impl_->child.wait(ec);
}

std::string BlobReader::read(std::string_view object_id) {
  impl_->requests << object_id << '\n' << std::flush;
  std::string header;
  if (!std::getline(impl_->responses, header)) {
    throw IoFailure("git cat-file terminated unexpectedly");
  }
  const auto fields = split(header, ' ');
  if (fields.size() != 3) {
    throw IoFailure("cannot read object " + std::string(object_id) + ": " +
                    header);
  }
  const size_t size = static_cast<size_t>(parse_count(fields[2]));
  std::string content(size, '\0');
  impl_->responses.read(content.data(), static_cast<std::streamsize>(size));
  impl_->responses.get();  // trailing LF
  if (!impl_->responses) {
    throw IoFailure("short read for object " + std::string(object_id));
  }
  return content;
}

std::vector<TreeEntry> list_c_files(const RepoHandle& repo,
                                    std::string_view commit_id) {
  const std::string out =
      run_git(repo.path(), {"ls-tree", "-r", "-z", "--full-tree",
                            std::string(commit_id)});
  std::vector<TreeEntry> entries;
  for (std::string_view record : split(out, '\0')) {
    // "<mode> <type> <oid>\t<path>"
    const size_t tab = record.find('\t');
    if (tab == std::string_view::npos) continue;
    const auto meta = split(record.substr(0, tab), ' ');
    const std::string_view path = record.substr(tab + 1);
    if (meta.size() != 3 || meta[1] != "blob" || meta[0] == "120000" ||
        !is_c_source(path)) {
      continue;
    }
    entries.push_back({std::string(path), std::string(meta[2])});
  }
  std::sort(entries.begin(), entries.end(),
            [](const TreeEntry& a, const TreeEntry& b) { return a.path < b.path; });
  return entries;
}

}  // namespace hemine

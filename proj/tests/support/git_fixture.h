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

// Scripted git repositories for tests. Every commit gets fixed author and
// committer dates so object ids are reproducible.

#ifndef HEMINE_TESTS_SUPPORT_GIT_FIXTURE_H_
#define HEMINE_TESTS_SUPPORT_GIT_FIXTURE_H_

#include <filesystem>
#include <string>
#include <vector>

namespace hemine::testing {

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct Person {
  std::string name;
  std::string email;
};

class GitFixture {
 public:
  // Runs `git init` in `dir` (created if needed) on branch "master".
  explicit GitFixture(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  void write(const std::string& rel_path, const std::string& content) const;
  void remove(const std::string& rel_path) const;
  void move(const std::string& from, const std::string& to) const;

  // Stages everything and commits. `date` is ISO-8601 with offset, e.g.
  // "2021-03-01T10:00:00+09:00". Returns the new commit id.
  std::string commit(const std::string& message, const Person& author,
                     const std::string& date) const;

  void checkout(const std::string& branch, bool create = false) const;

  // Non-fast-forward merge of `branch` into the current branch.
  std::string merge(const std::string& branch, const std::string& message,
                    const Person& author, const std::string& date) const;

  std::string head() const;

  // Runs git with the given arguments in the fixture; returns stdout.
  std::string git(const std::vector<std::string>& args,
                  const std::string& date = {},
                  const Person* author = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hemine::testing

#endif  // HEMINE_TESTS_SUPPORT_GIT_FIXTURE_H_

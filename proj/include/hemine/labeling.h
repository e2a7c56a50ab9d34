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

#ifndef HEMINE_LABELING_H_
#define HEMINE_LABELING_H_

#include <filesystem>
#include <map>
#include <regex>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hemine/change_attribution.h"

namespace hemine {

// Ordered, case-insensitive regular expressions matched anywhere in a full
// commit message (subject and body).
class KeywordRuleSet {
 public:
  // Throws UsageError when `patterns` is empty or a pattern does not compile.
  explicit KeywordRuleSet(std::vector<std::string> patterns);

  static KeywordRuleSet defaults();

  // One pattern per line; lines starting with '#' and blank lines are
  // skipped. Throws IoFailure when unreadable, UsageError when invalid.
  static KeywordRuleSet from_file(const std::filesystem::path& path);
  static KeywordRuleSet parse(std::string_view text);

  const std::vector<std::string>& patterns() const { return patterns_; }

  bool matches(std::string_view message) const;

 private:
  std::vector<std::string> patterns_;
  std::vector<std::regex> compiled_;
};

inline bool is_bugfix(std::string_view message, const KeywordRuleSet& rules) {
  return rules.matches(message);
}

// Label 1 iff some event of the method belongs to a bug-fix commit. The
// result has exactly the keys in `known_methods`; an event for a method not
// in that set throws KeyMismatch.
std::map<MethodKey, int> label_methods(
    const std::set<MethodKey>& known_methods,
    std::span<const ChangeEvent> events,
    const std::set<std::string, std::less<>>& bugfix_commits);

}  // namespace hemine

#endif  // HEMINE_LABELING_H_

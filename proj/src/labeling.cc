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

#include "hemine/labeling.h"

#include <fstream>
#include <sstream>

#include "hemine/error.h"

namespace hemine {

KeywordRuleSet::KeywordRuleSet(std::vector<std::string> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw UsageError("keyword rule set is empty");
  compiled_.reserve(patterns_.size());
  for (const std::string& p : patterns_) {
    try {
      compiled_.emplace_back(p, std::regex::ECMAScript | std::regex::icase |
                                    std::regex::optimize);
    } catch (const std::regex_error& e) {
      throw UsageError("invalid keyword pattern '" + p + "': " + e.what());
    }
  }
}

KeywordRuleSet KeywordRuleSet::defaults() {
  return KeywordRuleSet({
      R"(\bfix(es|ed|ing)?\b)",
      R"(\bbug(s|fix(es)?)?\b)",
      R"(\bdefect(s)?\b)",
      R"(\bfault(s|y)?\b)",
      R"(\brepair(s|ed)?\b)",
      R"(\bcrash(es|ed)?\b)",
  });
}

KeywordRuleSet KeywordRuleSet::parse(std::string_view text) {
  std::vector<std::string> patterns;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    patterns.push_back(line);
  }
  return KeywordRuleSet(std::move(patterns));
}

KeywordRuleSet KeywordRuleSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read keyword file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

bool KeywordRuleSet::matches(std::string_view message) const {
  for (const std::regex& re : compiled_) {
    if (std::regex_search(message.begin(), message.end(), re)) return true;
  }
  return false;
}

std::map<MethodKey, int> label_methods(
    const std::set<MethodKey>& known_methods,
    std::span<const ChangeEvent> events,
    const std::set<std::string, std::less<>>& bugfix_commits) {
  std::map<MethodKey, int> labels;
  for (const MethodKey& key : known_methods) labels.emplace(key, 0);
  for (const ChangeEvent& e : events) {
    const auto it = labels.find(e.key);
    if (it == labels.end()) {
      throw KeyMismatch("event for unknown method " + e.key.file_path + ":" +
                        e.key.method_name);
    }
    if (bugfix_commits.contains(e.commit_id)) it->second = 1;
  }
  return labels;
}

}  // namespace hemine

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

#ifndef HEMINE_SRC_GIT_COMMAND_H_
#define HEMINE_SRC_GIT_COMMAND_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace hemine::internal {

// Arguments prepended to every git invocation so that user configuration
// cannot change the output format we parse.
std::vector<std::string> git_base_args(const std::filesystem::path& repo);

// Runs git and hands its stdout to `consume`. Returns the exit code. Throws
// IoFailure when the git binary cannot be started.
int run_git_streaming(const std::filesystem::path& repo,
                      const std::vector<std::string>& args,
                      const std::function<void(std::istream&)>& consume);

// Runs git and returns its entire stdout. Throws IoFailure on non-zero exit.
std::string run_git(const std::filesystem::path& repo,
                    const std::vector<std::string>& args);

}  // namespace hemine::internal

#endif  // HEMINE_SRC_GIT_COMMAND_H_

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

#include "git_command.h"

#include <boost/process.hpp>
#include <iterator>

#include "hemine/error.h"

namespace bp = boost::process;

namespace hemine::internal {
namespace {

boost::filesystem::path git_executable() {
  static const boost::filesystem::path exe = bp::search_path("git");
  if (exe.empty()) throw IoFailure("git executable not found in PATH");
  return exe;
}

std::string describe(const std::vector<std::string>& args) {
  std::string out = "git";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

std::vector<std::string> git_base_args(const std::filesystem::path& repo) {
  return {"-C",
          repo.string(),
          "--no-pager",
          "-c", "core.quotePath=false",
          "-c", "color.ui=false",
          "-c", "diff.noprefix=false",
          "-c", "diff.mnemonicPrefix=false",
          "-c", "log.showSignature=false",
          "-c", "safe.directory=*"};
}

int run_git_streaming(const std::filesystem::path& repo,
                      const std::vector<std::string>& args,
                      const std::function<void(std::istream&)>& consume) {
  std::vector<std::string> full = git_base_args(repo);
  full.insert(full.end(), args.begin(), args.end());
  try {
    bp::ipstream out;
    bp::child child(git_executable(), full, bp::std_out > out,
                    bp::std_err > bp::null, bp::std_in < bp::null);
    consume(out);
    // Drain whatever the consumer left so git never blocks on a full pipe.
    out.ignore(std::numeric_limits<std::streamsize>::max());
    child.wait();
    return child.exit_code();
  } catch (const bp::process_error& e) {
    throw IoFailure("cannot run " + describe(args) + ": " + e.what());
  }
}

std::string run_git(const std::filesystem::path& repo,
                    const std::vector<std::string>& args) {
  std::string text;
  const int rc = run_git_streaming(repo, args, [&](std::istream& in) {
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  });
  if (rc != 0) {
    throw IoFailure(describe(args) + " failed with exit code " +
                    std::to_string(rc));
  }
  return text;
}

}  // namespace hemine::internal

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

// Lexical C function extraction and per-line classification.
//
// This is a scanner, not a C grammar. It masks comments, string and
// character literals, and preprocessor directives, then looks for a
// file-scope `identifier ( ... ) {` sequence and its matching `}`. Macro
// expansion and K&R parameter declarations are not handled.

#ifndef HEMINE_METHOD_PARSER_H_
#define HEMINE_METHOD_PARSER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hemine {

enum class LineClass { kCode, kComment, kBlank };

struct MethodSpan {
  std::string file_path;
  std::string name;
  int start_line = 0;  // 1-based, inclusive
  int end_line = 0;    // 1-based, inclusive; the closing brace line
  bool body_brace_depth_ok = true;

  int length() const { return end_line - start_line + 1; }
};

struct CodeMetrics {
  int c1_all_lines = 0;
  int c2_code_lines = 0;
  int c3_blank_lines = 0;
  int c4_comment_lines = 0;

  friend bool operator==(const CodeMetrics&, const CodeMetrics&) = default;
};

struct ParseDiagnostics {
  int duplicate_names_dropped = 0;
  // Set when EOF was reached inside a function body; that span is dropped.
  bool unbalanced_at_eof = false;
};

// Number of physical lines: "" has none, a trailing LF does not start a new
// line.
int count_lines(std::string_view source);

// One class per physical line. A line with any code token is Code (code wins
// over a trailing comment); preprocessor lines are Code.
std::vector<LineClass> classify_lines(std::string_view source);

// `source` with comment text, literal contents, and preprocessor directive
// lines replaced by spaces. Newlines and quote characters are kept, so line
// and column positions are unchanged.
std::string mask_source(std::string_view source);

// File-scope function definitions in source order. Duplicate names keep the
// first span.
std::vector<MethodSpan> extract_methods(std::string_view source);
std::vector<MethodSpan> extract_methods(std::string_view source,
                                        ParseDiagnostics& diagnostics);

// Throws SpanOutOfRange when the span is not inside `classes`.
CodeMetrics code_metrics(const MethodSpan& span,
                         std::span<const LineClass> classes);

}  // namespace hemine

#endif  // HEMINE_METHOD_PARSER_H_

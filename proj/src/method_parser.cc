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

#include "hemine/method_parser.h"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "hemine/error.h"

namespace hemine {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

struct ScanResult {
  std::string masked;
  std::vector<LineClass> classes;
};

// Single forward pass shared by classification and masking.
ScanResult scan(std::string_view src) {
  enum class State { kNormal, kLineComment, kBlockComment, kString, kChar };

  ScanResult out;
  out.masked.reserve(src.size());
  State state = State::kNormal;
  bool directive = false;
  bool line_has_code = false;
  bool line_has_comment = false;
  bool line_open = false;

  auto end_line = [&] {
    out.classes.push_back(line_has_code      ? LineClass::kCode
                          : line_has_comment ? LineClass::kComment
                                             : LineClass::kBlank);
    line_has_code = line_has_comment = line_open = false;
  };
  auto continued_at = [&](size_t newline) {
    size_t j = newline;
    if (j > 0 && src[j - 1] == '\r') --j;
    return j > 0 && src[j - 1] == '\\';
  };

  for (size_t i = 0; i < src.size(); ++i) {
    const char c = src[i];
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    if (c == '\n') {
      const bool continued = continued_at(i);
      if (!continued &&
          (state == State::kLineComment || state == State::kString ||
           state == State::kChar)) {
        state = State::kNormal;  // unterminated literals stop at EOL
      }
      if (!continued) directive = false;
      out.masked += '\n';
      end_line();
      continue;
    }
    line_open = true;

    switch (state) {
      case State::kNormal:
        if (c == '/' && (next == '*' || next == '/')) {
          state = next == '*' ? State::kBlockComment : State::kLineComment;
          line_has_comment = true;
          out.masked += "  ";
          ++i;
          break;
        }
        if (is_space(c)) {
          out.masked += ' ';
          break;
        }
        if (c == '#' && !line_has_code) directive = true;
        line_has_code = true;
        if (c == '"') state = State::kString;
        if (c == '\'') state = State::kChar;
        out.masked += directive ? ' ' : c;
        break;

      case State::kBlockComment:
        if (!is_space(c)) line_has_comment = true;
        if (c == '*' && next == '/') {
          state = State::kNormal;
          out.masked += "  ";
          ++i;
        } else {
          out.masked += ' ';
        }
        break;

      case State::kLineComment:
        if (!is_space(c)) line_has_comment = true;
        out.masked += ' ';
        break;

      case State::kString:
      case State::kChar: {
        line_has_code = true;
        const char quote = state == State::kString ? '"' : '\'';
        if (c == '\\' && next != '\n' && next != '\0') {
          out.masked += "  ";
          ++i;
        } else if (c == quote) {
          state = State::kNormal;
          out.masked += directive ? ' ' : c;
        } else {
          out.masked += ' ';
        }
        break;
      }
    }
  }
  if (line_open) end_line();
  return out;
}

const std::unordered_set<std::string_view>& attribute_keywords() {
  static const std::unordered_set<std::string_view> k = {
      "__attribute__", "__attribute", "__declspec", "__asm__",
      "__asm",         "asm",         "_Alignas",   "alignas"};
  return k;
}

const std::unordered_set<std::string_view>& control_keywords() {
  static const std::unordered_set<std::string_view> k = {
      "if",     "while",   "for",      "switch",  "return",
      "sizeof", "_Alignof", "_Generic", "typeof", "__typeof__"};
  return k;
}

struct Token {
  enum class Kind { kIdent, kGroup, kPunct };
  Kind kind;
  std::string_view text;  // identifier, group name (may be empty), or punct
  int line;
};

class Extractor {
 public:
  explicit Extractor(std::string_view masked) : src_(masked) {}

  std::vector<MethodSpan> run(ParseDiagnostics& diag) {
    std::vector<MethodSpan> spans;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (is_ident_start(c)) {
        const size_t begin = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        tokens_.push_back(
            {Token::Kind::kIdent, src_.substr(begin, pos_ - begin), line_});
      } else if (c == '(') {
        std::string_view name;
        if (!tokens_.empty() && tokens_.back().kind == Token::Kind::kIdent) {
          name = tokens_.back().text;
        }
        const int line = line_;
        if (!skip_balanced('(', ')')) break;
        tokens_.push_back({Token::Kind::kGroup, name, line});
      } else if (c == ';') {
        ++pos_;
        tokens_.clear();
      } else if (c == '{') {
        if (is_extern_block()) {
          ++transparent_depth_;
          ++pos_;
          tokens_.clear();
          continue;
        }
        const auto candidate = function_candidate();
        if (!skip_balanced('{', '}')) {
          if (candidate) diag.unbalanced_at_eof = true;
          break;
        }
        if (candidate) {
          MethodSpan span;
          span.name = std::string(candidate->name);
          span.start_line = candidate->start_line;
          span.end_line = line_;
          spans.push_back(std::move(span));
          tokens_.clear();
        } else {
          tokens_.push_back({Token::Kind::kPunct, "{}", line_});
        }
      } else if (c == '}') {
        ++pos_;
        if (transparent_depth_ > 0) --transparent_depth_;
        tokens_.clear();
      } else {
        tokens_.push_back({Token::Kind::kPunct, src_.substr(pos_, 1), line_});
        ++pos_;
      }
    }
    return spans;
  }

 private:
  struct Candidate {
    std::string_view name;
    int start_line;
  };

  // Advances past the group opened at pos_, counting newlines. Returns false
  // when EOF comes first.
  bool skip_balanced(char open, char close) {
    int depth = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_++];
      if (c == '\n') {
        ++line_;
      } else if (c == open) {
        ++depth;
      } else if (c == close && --depth == 0) {
        return true;
      }
    }
    return false;
  }

  bool is_extern_block() const {
    return tokens_.size() == 3 && tokens_[0].kind == Token::Kind::kIdent &&
           tokens_[0].text == "extern" && tokens_[1].text == "\"" &&
           tokens_[2].text == "\"";
  }

  std::optional<Candidate> function_candidate() const {
    for (const Token& t : tokens_) {
      if (t.kind == Token::Kind::kPunct && t.text == "=") return std::nullopt;
    }
    // Walk back over trailing attributes to the parameter list.
    size_t i = tokens_.size();
    while (i > 0) {
      const Token& t = tokens_[i - 1];
      if (t.kind == Token::Kind::kPunct) return std::nullopt;
      if (t.kind == Token::Kind::kGroup &&
          !attribute_keywords().contains(t.text)) {
        break;
      }
      --i;
    }
    if (i == 0) return std::nullopt;
    const Token& params = tokens_[i - 1];
    if (params.text.empty() || control_keywords().contains(params.text)) {
      return std::nullopt;
    }
    // i - 2 is the name identifier. The definition starts after the last
    // non-attribute group before it (e.g. a macro invocation without `;`).
    size_t first = 0;
    for (size_t j = i - 2; j-- > 0;) {
      if (tokens_[j].kind == Token::Kind::kGroup &&
          !attribute_keywords().contains(tokens_[j].text)) {
        first = j + 1;
        break;
      }
    }
    return Candidate{params.text, tokens_[first].line};
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int transparent_depth_ = 0;
  std::vector<Token> tokens_;
};

}  // namespace

int count_lines(std::string_view source) {
  if (source.empty()) return 0;
  const auto newlines =
      static_cast<int>(std::count(source.begin(), source.end(), '\n'));
  return source.back() == '\n' ? newlines : newlines + 1;
}

std::vector<LineClass> classify_lines(std::string_view source) {
  return scan(source).classes;
}

std::string mask_source(std::string_view source) {
  return scan(source).masked;
}

std::vector<MethodSpan> extract_methods(std::string_view source,
                                        ParseDiagnostics& diagnostics) {
  const std::string masked = mask_source(source);
  std::vector<MethodSpan> spans = Extractor(masked).run(diagnostics);
  std::unordered_set<std::string> seen;
  std::erase_if(spans, [&](const MethodSpan& s) {
    if (seen.insert(s.name).second) return false;
    ++diagnostics.duplicate_names_dropped;
    return true;
  });
  return spans;
}

std::vector<MethodSpan> extract_methods(std::string_view source) {
  ParseDiagnostics ignored;
  return extract_methods(source, ignored);
}

CodeMetrics code_metrics(const MethodSpan& span,
                         std::span<const LineClass> classes) {
  if (span.start_line < 1 || span.end_line < span.start_line ||
      static_cast<size_t>(span.end_line) > classes.size()) {
    throw SpanOutOfRange("span " + std::to_string(span.start_line) + "-" +
                         std::to_string(span.end_line) + " outside " +
                         std::to_string(classes.size()) + " lines");
  }
  CodeMetrics m;
  for (int line = span.start_line; line <= span.end_line; ++line) {
    switch (classes[static_cast<size_t>(line - 1)]) {
      case LineClass::kCode: ++m.c2_code_lines; break;
      case LineClass::kBlank: ++m.c3_blank_lines; break;
      case LineClass::kComment: ++m.c4_comment_lines; break;
    }
  }
  m.c1_all_lines = span.length();
  return m;
}

}  // namespace hemine

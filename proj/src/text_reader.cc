// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fraccomp/text_reader.h"

#include <cctype>
#include <charconv>
#include <sstream>

#include "fraccomp/error.h"

namespace fraccomp {

TextReader::TextReader(std::string_view text, std::string_view format)
    : format_(format) {
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines_.push_back(std::move(line));
    start = end + 1;
  }
}

std::optional<std::vector<std::string>> TextReader::TryNextTokens() {
  while (next_ < lines_.size()) {
    const std::string& line = lines_[next_++];
    current_line_ = next_;
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    return tokens;
  }
  return std::nullopt;
}

std::vector<std::string> TextReader::NextTokens() {
  auto tokens = TryNextTokens();
  if (!tokens) {
    current_line_ = lines_.size();
    Fail("unexpected end of input");
  }
  return *std::move(tokens);
}

void TextReader::ExpectEnd() {
  if (TryNextTokens()) Fail("unexpected trailing content");
}

size_t TextReader::ParseCount(std::string_view token) const {
  size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    Fail("expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Rational TextReader::ParseRationalToken(std::string_view token) const {
  try {
    return Rational::Parse(token);
  } catch (const Error& e) {
    Fail(e.what());
  }
}

void TextReader::Fail(const std::string& message) const {
  throw Error(ErrorCode::kParse, format_ + " line " +
                                     std::to_string(current_line_) + ": " +
                                     message);
}

}  // namespace fraccomp

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

#ifndef FRACCOMP_TEXT_READER_H_
#define FRACCOMP_TEXT_READER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fraccomp/rational.h"

namespace fraccomp {

// Line-oriented tokenizer shared by the file-format parsers. Blank lines and
// lines whose first non-space character is '#' are skipped. Errors carry the
// 1-based line number.
class TextReader {
 public:
  TextReader(std::string_view text, std::string_view format);

  // Tokens of the next content line, or nullopt at end of input.
  std::optional<std::vector<std::string>> TryNextTokens();
  // Like TryNextTokens but fails at end of input.
  std::vector<std::string> NextTokens();
  void ExpectEnd();

  size_t ParseCount(std::string_view token) const;
  Rational ParseRationalToken(std::string_view token) const;

  [[noreturn]] void Fail(const std::string& message) const;

 private:
  std::vector<std::string> lines_;
  size_t next_ = 0;
  size_t current_line_ = 0;
  std::string format_;
};

}  // namespace fraccomp

#endif  // FRACCOMP_TEXT_READER_H_

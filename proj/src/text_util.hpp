// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCM_SRC_TEXT_UTIL_HPP
#define DCM_SRC_TEXT_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "dcm/error.hpp"

namespace dcm::detail {

// Yields whitespace-split tokens of each non-blank, non-comment line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      const auto first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos || text[first] == '#') continue;
      tokens.clear();
      std::istringstream split(text);
      for (std::string tok; split >> tok;) tokens.push_back(tok);
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline std::uint64_t parse_natural(const std::string& tok, std::size_t line,
                                   std::uint64_t max = std::numeric_limits<std::uint32_t>::max()) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected a non-negative integer, got `" + tok + "`", line);
  }
  if (value > max) throw ParseError("value `" + tok + "` too large", line);
  return value;
}

inline std::int64_t parse_integer(const std::string& tok, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer, got `" + tok + "`", line);
  }
  return value;
}

}  // namespace dcm::detail

#endif  // DCM_SRC_TEXT_UTIL_HPP

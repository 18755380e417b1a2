// Copyright 2026 The mcdm-rank Authors.
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

#ifndef MCDM_TEXT_HPP_
#define MCDM_TEXT_HPP_

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

namespace mcdm {

inline std::string Trim(std::string_view text) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  auto begin = std::find_if_not(text.begin(), text.end(), is_space);
  auto end = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
  return begin < end ? std::string(begin, end) : std::string();
}

inline std::string ToLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Case-insensitive comparison after trimming surrounding whitespace.
inline bool SameName(std::string_view a, std::string_view b) {
  return ToLower(Trim(a)) == ToLower(Trim(b));
}

// All reals leave the process with 10 significant digits so that golden
// outputs are stable across platforms and standard libraries.
inline constexpr int kSignificantDigits = 10;

inline std::string FormatReal(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", kSignificantDigits, value);
  return buf;
}

// Rounds to the value whose shortest round-trip spelling is FormatReal(value).
inline double RoundSignificant(double value) {
  if (value == 0.0) return 0.0;
  return std::strtod(FormatReal(value).c_str(), nullptr);
}

}  // namespace mcdm

#endif  // MCDM_TEXT_HPP_

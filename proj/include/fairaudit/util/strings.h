// Copyright 2026 The Fairaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// String helpers over std::string_view. The system abseil is built with its
// own string_view type, so its string utilities do not accept std types.

#ifndef FAIRAUDIT_UTIL_STRINGS_H_
#define FAIRAUDIT_UTIL_STRINGS_H_

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "fmt/format.h"
#include "fmt/printf.h"
#include "fmt/ranges.h"

namespace fairaudit {
namespace strings_internal {

template <typename T>
void AppendPiece(std::string& out, const T& piece) {
  if constexpr (std::is_convertible_v<const T&, std::string_view>) {
    out.append(std::string_view(piece));
  } else if constexpr (requires {
                         { piece.data() } -> std::convertible_to<const char*>;
                         piece.size();
                       }) {
    // e.g. absl::string_view from Status::message().
    out.append(piece.data(), piece.size());
  } else {
    fmt::format_to(std::back_inserter(out), "{}", piece);
  }
}

}  // namespace strings_internal

template <typename... Args>
void StrAppend(std::string* out, const Args&... args) {
  (strings_internal::AppendPiece(*out, args), ...);
}

template <typename... Args>
std::string StrCat(const Args&... args) {
  std::string out;
  StrAppend(&out, args...);
  return out;
}

std::string_view Trim(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char delimiter,
                                    bool skip_empty = false);

// Splits at the first `delimiter`; the second half is empty when absent.
std::pair<std::string_view, std::string_view> SplitOnce(std::string_view text,
                                                        char delimiter);

// Whole-string parses; surrounding whitespace is allowed.
bool ParseInt64(std::string_view text, int64_t* value);
bool ParseDouble(std::string_view text, double* value);

}  // namespace fairaudit

#endif  // FAIRAUDIT_UTIL_STRINGS_H_

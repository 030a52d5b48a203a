// Copyright 2026 The emojiseg Authors. All Rights Reserved.
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

#ifndef EMOJISEG_UTF8_HPP_
#define EMOJISEG_UTF8_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emojiseg::utf8 {

/// A decoded scalar value and the byte range it came from. Ill-formed input
/// decodes to U+FFFD covering the maximal ill-formed subpart.
struct Decoded {
  char32_t cp;
  std::size_t offset;
  std::size_t length;
};

std::vector<Decoded> decode(std::string_view text);
std::vector<char32_t> to_codepoints(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(std::span<const char32_t> cps);

/// "U+1F44D U+1F3FB"
std::string format_codepoints(std::span<const char32_t> cps);

}  // namespace emojiseg::utf8

#endif  // EMOJISEG_UTF8_HPP_

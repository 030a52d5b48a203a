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

#include "emojiseg/utf8.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>

namespace emojiseg::utf8 {

std::vector<Decoded> decode(std::string_view text) {
  std::vector<Decoded> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  // ICU indexes with int32_t; longer inputs are decoded in windows.
  constexpr std::size_t kWindow = std::numeric_limits<std::int32_t>::max() / 2;
  std::size_t base = 0;
  while (base < text.size()) {
    const auto length = static_cast<std::int32_t>(std::min(kWindow, text.size() - base));
    std::int32_t i = 0;
    while (i < length) {
      const std::int32_t start = i;
      UChar32 c;
      U8_NEXT_OR_FFFD(s + base, i, length, c);
      out.push_back({static_cast<char32_t>(c), base + static_cast<std::size_t>(start),
                     static_cast<std::size_t>(i - start)});
    }
    base += static_cast<std::size_t>(length);
  }
  return out;
}

std::vector<char32_t> to_codepoints(std::string_view text) {
  std::vector<char32_t> out;
  for (const auto& d : decode(text)) out.push_back(d.cp);
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::span<const char32_t> cps) {
  std::string out;
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::string format_codepoints(std::span<const char32_t> cps) {
  std::string out;
  char buf[16];
  for (char32_t cp : cps) {
    if (!out.empty()) out.push_back(' ');
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    out += buf;
  }
  return out;
}

}  // namespace emojiseg::utf8

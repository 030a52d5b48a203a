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

#include "emojiseg/codepoint_registry.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

#include "emojiseg/bundled_data.hpp"
#include "emojiseg/error.hpp"

namespace emojiseg {
namespace {

constexpr std::array<std::pair<CodePointClass, std::string_view>, 12> kClassNames{{
    {CodePointClass::kEmojiBase, "EMOJI_BASE"},
    {CodePointClass::kToneCapableBase, "TONE_CAPABLE_BASE"},
    {CodePointClass::kSkinToneModifier, "SKIN_TONE_MODIFIER"},
    {CodePointClass::kZeroWidthJoiner, "ZERO_WIDTH_JOINER"},
    {CodePointClass::kVariationSelectorEmoji, "VARIATION_SELECTOR_EMOJI"},
    {CodePointClass::kVariationSelectorText, "VARIATION_SELECTOR_TEXT"},
    {CodePointClass::kRegionalIndicator, "REGIONAL_INDICATOR"},
    {CodePointClass::kKeycapBase, "KEYCAP_BASE"},
    {CodePointClass::kCombiningKeycap, "COMBINING_KEYCAP"},
    {CodePointClass::kTagChar, "TAG_CHAR"},
    {CodePointClass::kTagTerminator, "TAG_TERMINATOR"},
    {CodePointClass::kNonEmoji, "NON_EMOJI"},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<char32_t> parse_hex(std::string_view s) {
  unsigned value = 0;
  if (s.empty() || s.size() > 6) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value > 0x10FFFF) return std::nullopt;
  return static_cast<char32_t>(value);
}

}  // namespace

std::string_view to_string(CodePointClass cls) noexcept {
  for (const auto& [c, name] : kClassNames) {
    if (c == cls) return name;
  }
  return "NON_EMOJI";
}

std::optional<CodePointClass> class_from_string(std::string_view name) noexcept {
  for (const auto& [c, n] : kClassNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

Registry Registry::load(std::string_view data, std::string_view source) {
  struct Entry {
    Range range;
    std::size_t line;
  };
  std::vector<Entry> entries;
  Registry registry;
  const std::string src(source);

  std::size_t line_no = 0;
  while (!data.empty()) {
    const auto nl = data.find('\n');
    std::string_view line = data.substr(0, nl);
    data.remove_prefix(nl == std::string_view::npos ? data.size() : nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kVersion = "# Version:";
      if (line.starts_with(kVersion)) registry.version_ = std::string(trim(line.substr(kVersion.size())));
      continue;
    }
    line = trim(line.substr(0, line.find('#')));

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(src, line_no, "expected CODEPOINTS<TAB>CLASS");
    const std::string_view cps = trim(line.substr(0, tab));
    const std::string_view name = trim(line.substr(tab + 1));

    const auto cls = class_from_string(name);
    if (!cls || *cls == CodePointClass::kNonEmoji) {
      throw ParseError(src, line_no, "unknown class '" + std::string(name) + "'");
    }

    std::optional<char32_t> first, last;
    if (const auto dots = cps.find(".."); dots != std::string_view::npos) {
      first = parse_hex(cps.substr(0, dots));
      last = parse_hex(cps.substr(dots + 2));
    } else {
      first = last = parse_hex(cps);
    }
    if (!first || !last) throw ParseError(src, line_no, "malformed code point '" + std::string(cps) + "'");
    if (*first > *last) throw ParseError(src, line_no, "range start after range end");
    entries.push_back({{*first, *last, *cls}, line_no});
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.range.first < b.range.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].range.first <= entries[i - 1].range.last) {
      const auto [a, b] = std::minmax(entries[i - 1].line, entries[i].line);
      throw ParseError(src, b,
                       "range overlaps the one on line " + std::to_string(a) + " (lines " +
                           std::to_string(a) + " and " + std::to_string(b) + ")");
    }
  }
  registry.ranges_.reserve(entries.size());
  for (const auto& e : entries) registry.ranges_.push_back(e.range);
  return registry;
}

const Registry& Registry::bundled() {
  static const Registry registry = load(bundled::emoji_properties(), "emoji-properties.txt");
  return registry;
}

CodePointClass Registry::classify(char32_t cp) const noexcept {
  auto it = std::upper_bound(ranges_.begin(), ranges_.end(), cp,
                             [](char32_t value, const Range& r) { return value < r.first; });
  if (it == ranges_.begin()) return CodePointClass::kNonEmoji;
  --it;
  return cp <= it->last ? it->cls : CodePointClass::kNonEmoji;
}

}  // namespace emojiseg

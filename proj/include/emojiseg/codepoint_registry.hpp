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

#ifndef EMOJISEG_CODEPOINT_REGISTRY_HPP_
#define EMOJISEG_CODEPOINT_REGISTRY_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emojiseg {

/// Emoji-relevant class of a single code point. Every scalar value has exactly
/// one class; anything the registry does not list is kNonEmoji.
enum class CodePointClass : std::uint8_t {
  kEmojiBase,
  kToneCapableBase,
  kSkinToneModifier,
  kZeroWidthJoiner,
  kVariationSelectorEmoji,
  kVariationSelectorText,
  kRegionalIndicator,
  kKeycapBase,
  kCombiningKeycap,
  kTagChar,
  kTagTerminator,
  kNonEmoji,
};

/// Upper snake case spelling used in the property file, e.g. "SKIN_TONE_MODIFIER".
std::string_view to_string(CodePointClass cls) noexcept;
std::optional<CodePointClass> class_from_string(std::string_view name) noexcept;

/// Tone-capable bases are emoji bases too.
constexpr bool is_emoji_base(CodePointClass cls) noexcept {
  return cls == CodePointClass::kEmojiBase || cls == CodePointClass::kToneCapableBase;
}

constexpr bool is_variation_selector(CodePointClass cls) noexcept {
  return cls == CodePointClass::kVariationSelectorEmoji ||
         cls == CodePointClass::kVariationSelectorText;
}

struct Plane {
  int index = 0;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

constexpr Plane plane_of(char32_t cp) noexcept { return Plane{static_cast<int>(cp / 0x10000)}; }

constexpr bool is_skin_tone(char32_t cp) noexcept { return cp >= 0x1F3FB && cp <= 0x1F3FF; }

/// Immutable range table from code points to classes.
class Registry {
 public:
  struct Range {
    char32_t first;
    char32_t last;
    CodePointClass cls;
  };

  Registry() = default;

  /// Parses the emoji-property format:
  ///
  ///   # Version: emoji-15.1
  ///   1F3FB..1F3FF<TAB>SKIN_TONE_MODIFIER
  ///   200D<TAB>ZERO_WIDTH_JOINER
  ///
  /// Text from "#" to the end of a line is a comment.
  /// Throws ParseError on malformed lines, unknown class names and
  /// overlapping ranges (the message names both lines).
  static Registry load(std::string_view data, std::string_view source = "<registry>");

  /// The snapshot compiled into the library.
  static const Registry& bundled();

  CodePointClass classify(char32_t cp) const noexcept;

  const std::string& version() const noexcept { return version_; }
  std::span<const Range> ranges() const noexcept { return ranges_; }

 private:
  std::vector<Range> ranges_;
  std::string version_;
};

inline Registry load_registry(std::string_view data, std::string_view source = "<registry>") {
  return Registry::load(data, source);
}

inline CodePointClass classify(const Registry& registry, char32_t cp) noexcept {
  return registry.classify(cp);
}

}  // namespace emojiseg

#endif  // EMOJISEG_CODEPOINT_REGISTRY_HPP_

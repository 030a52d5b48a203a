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

#include "emojiseg/emoji_segmenter.hpp"

#include <algorithm>

#include "emojiseg/error.hpp"
#include "emojiseg/utf8.hpp"

namespace emojiseg {
namespace {

using Cls = CodePointClass;

// Longest-match lengths of each production at `pos`; 0 means no match.
class Matcher {
 public:
  Matcher(const Registry& registry, std::span<const char32_t> cps) : registry_(registry), cps_(cps) {}

  Cls at(std::size_t i) const { return i < cps_.size() ? registry_.classify(cps_[i]) : Cls::kNonEmoji; }

  // BASE VS? TONE?  (KEYCAP_BASE only when `keycap_base` is allowed, never toned)
  std::size_t unit(std::size_t i, bool keycap_base) const {
    const Cls base = at(i);
    if (!is_emoji_base(base) && !(keycap_base && base == Cls::kKeycapBase)) return 0;
    std::size_t j = i + 1;
    if (is_variation_selector(at(j))) ++j;
    if (base == Cls::kToneCapableBase && at(j) == Cls::kSkinToneModifier) ++j;
    return j - i;
  }

  std::size_t zwj(std::size_t i) const {
    const std::size_t first = unit(i, false);
    if (first == 0) return 0;
    std::size_t j = i + first;
    bool joined = false;
    while (at(j) == Cls::kZeroWidthJoiner) {
      const std::size_t next = unit(j + 1, false);
      if (next == 0) break;
      j += 1 + next;
      joined = true;
    }
    return joined ? j - i : 0;
  }

  std::size_t flag(std::size_t i) const {
    return at(i) == Cls::kRegionalIndicator && at(i + 1) == Cls::kRegionalIndicator ? 2 : 0;
  }

  std::size_t keycap(std::size_t i) const {
    if (at(i) != Cls::kKeycapBase) return 0;
    std::size_t j = i + 1;
    if (is_variation_selector(at(j))) ++j;
    return at(j) == Cls::kCombiningKeycap ? j + 1 - i : 0;
  }

  std::size_t tag(std::size_t i) const {
    if (!is_emoji_base(at(i))) return 0;
    std::size_t j = i + 1;
    while (at(j) == Cls::kTagChar) ++j;
    if (j == i + 1 || at(j) != Cls::kTagTerminator) return 0;
    return j + 1 - i;
  }

  struct Match {
    std::size_t length;
    SequenceKind kind;
    bool degenerate;
  };

  Match longest(std::size_t i) const {
    Match best{0, SequenceKind::kBasic, false};
    auto consider = [&](std::size_t len, SequenceKind kind) {
      if (len > best.length) best = {len, kind, false};
    };
    consider(unit(i, true), SequenceKind::kBasic);
    consider(zwj(i), SequenceKind::kZwjSequence);
    consider(flag(i), SequenceKind::kFlagSequence);
    consider(keycap(i), SequenceKind::kKeycapSequence);
    consider(tag(i), SequenceKind::kTagSequence);
    if (best.length == 0) {
      switch (at(i)) {
        case Cls::kSkinToneModifier:
          return {1, SequenceKind::kStandaloneModifier, false};
        case Cls::kRegionalIndicator:
          return {1, SequenceKind::kBasic, false};
        default:
          return {1, SequenceKind::kBasic, true};
      }
    }
    if (best.kind == SequenceKind::kBasic) {
      for (std::size_t k = i; k < i + best.length; ++k) {
        if (at(k) == Cls::kSkinToneModifier) best.kind = SequenceKind::kModifierSequence;
      }
    }
    return best;
  }

 private:
  const Registry& registry_;
  std::span<const char32_t> cps_;
};

EmojiSequence build(std::span<const char32_t> cps, SequenceKind kind, bool degenerate) {
  EmojiSequence seq;
  seq.codepoints.assign(cps.begin(), cps.end());
  seq.kind = kind;
  seq.degenerate = degenerate;
  for (char32_t cp : cps) {
    if (is_skin_tone(cp)) seq.skin_tones.push_back(cp);
    seq.max_plane = std::max(seq.max_plane, plane_of(cp));
  }
  return seq;
}

}  // namespace

std::string_view to_string(SequenceKind kind) noexcept {
  switch (kind) {
    case SequenceKind::kBasic: return "Basic";
    case SequenceKind::kModifierSequence: return "ModifierSequence";
    case SequenceKind::kZwjSequence: return "ZwjSequence";
    case SequenceKind::kFlagSequence: return "FlagSequence";
    case SequenceKind::kKeycapSequence: return "KeycapSequence";
    case SequenceKind::kTagSequence: return "TagSequence";
    case SequenceKind::kStandaloneModifier: return "StandaloneModifier";
  }
  return "Basic";
}

std::string EmojiSequence::utf8() const { return utf8::encode(codepoints); }

std::vector<EmojiSequence> segment_emoji_run(const Registry& registry,
                                             std::span<const char32_t> cps) {
  std::vector<EmojiSequence> out;
  const Matcher matcher(registry, cps);
  std::size_t i = 0;
  while (i < cps.size()) {
    const auto m = matcher.longest(i);
    out.push_back(build(cps.subspan(i, m.length), m.kind, m.degenerate));
    i += m.length;
  }
  return out;
}

EmojiSequence make_sequence(const Registry& registry, std::span<const char32_t> cps) {
  if (cps.empty()) return EmojiSequence{};
  const Matcher matcher(registry, cps);
  const auto m = matcher.longest(0);
  return build(cps.subspan(0, m.length), m.kind, m.degenerate);
}

EmojiSequence apply_skin_tone(const Registry& registry, const EmojiSequence& seq, char32_t tone) {
  if (registry.classify(tone) != Cls::kSkinToneModifier) {
    throw SkinToneError(SkinToneError::Reason::kInvalidTone,
                        utf8::format_codepoints(std::span(&tone, 1)) + " is not a skin tone modifier");
  }
  if (seq.kind != SequenceKind::kBasic || seq.degenerate || seq.codepoints.empty()) {
    throw SkinToneError(SkinToneError::Reason::kNotBasic,
                        "skin tones apply to basic sequences, got " + std::string(to_string(seq.kind)));
  }
  const char32_t base = seq.codepoints.front();
  if (registry.classify(base) != Cls::kToneCapableBase) {
    throw SkinToneError(SkinToneError::Reason::kNotToneCapable,
                        utf8::format_codepoints(std::span(&base, 1)) + " does not take a skin tone");
  }
  const char32_t toned[] = {base, tone};
  return build(toned, SequenceKind::kModifierSequence, false);
}

EmojiSequence strip_skin_tones(const Registry& registry, const EmojiSequence& seq) {
  if (seq.kind == SequenceKind::kStandaloneModifier || seq.skin_tones.empty()) return seq;
  std::vector<char32_t> kept;
  std::copy_if(seq.codepoints.begin(), seq.codepoints.end(), std::back_inserter(kept),
               [](char32_t cp) { return !is_skin_tone(cp); });
  return make_sequence(registry, kept);
}

std::vector<char32_t> lexicon_key(std::span<const char32_t> cps) {
  std::vector<char32_t> key;
  for (char32_t cp : cps) {
    if (is_skin_tone(cp) || cp == 0xFE0F || cp == 0xFE0E) continue;
    key.push_back(cp);
  }
  if (key.empty()) key.assign(cps.begin(), cps.end());
  return key;
}

}  // namespace emojiseg

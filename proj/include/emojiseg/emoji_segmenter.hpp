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

#ifndef EMOJISEG_EMOJI_SEGMENTER_HPP_
#define EMOJISEG_EMOJI_SEGMENTER_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojiseg/codepoint_registry.hpp"

namespace emojiseg {

enum class SequenceKind {
  kBasic,
  kModifierSequence,
  kZwjSequence,
  kFlagSequence,
  kKeycapSequence,
  kTagSequence,
  kStandaloneModifier,
};

std::string_view to_string(SequenceKind kind) noexcept;

/// One complete emoji as the segmenter recognized it.
///
/// `degenerate` marks a code point no grammar production accepts (a dangling
/// ZWJ, a stray selector or tag character). Such a sequence is always a single
/// code point of kind kBasic.
struct EmojiSequence {
  std::vector<char32_t> codepoints;
  SequenceKind kind = SequenceKind::kBasic;
  std::vector<char32_t> skin_tones;
  Plane max_plane;
  bool degenerate = false;

  std::string utf8() const;

  friend bool operator==(const EmojiSequence&, const EmojiSequence&) = default;
};

/// Leftmost-longest parse of a run of emoji-related code points. The grammar,
/// tried at every position with the longest match winning:
///
///   flag     := RI RI
///   keycap   := KEYCAP_BASE VS? COMBINING_KEYCAP
///   tag      := BASE TAG_CHAR+ TAG_TERMINATOR
///   zwj      := unit (ZWJ unit)+
///   unit     := BASE VS? TONE?        (TONE only after a tone-capable base)
///   single   := KEYCAP_BASE VS? | RI  (plain Basic)
///   modifier := TONE                  (StandaloneModifier)
///
/// Anything else becomes a one code point degenerate sequence, so the function
/// is total and the output codepoints concatenate back to the input.
std::vector<EmojiSequence> segment_emoji_run(const Registry& registry,
                                             std::span<const char32_t> cps);

/// Builds a sequence for `cps`, which must be exactly one grammar match.
/// Falls back to the first sequence of the parse otherwise.
EmojiSequence make_sequence(const Registry& registry, std::span<const char32_t> cps);

inline SequenceKind sequence_kind(const EmojiSequence& seq) noexcept { return seq.kind; }

/// base + tone. Drops any variation selector. Throws SkinToneError if `seq` is
/// not a Basic sequence on a tone-capable base or `tone` is not a modifier.
EmojiSequence apply_skin_tone(const Registry& registry, const EmojiSequence& seq, char32_t tone);

/// Removes every skin tone modifier and recomputes the kind. A standalone
/// modifier has nothing to strip onto and is returned unchanged.
EmojiSequence strip_skin_tones(const Registry& registry, const EmojiSequence& seq);

/// Lookup key shared by the lexicons: tone modifiers and variation selectors
/// removed.
std::vector<char32_t> lexicon_key(std::span<const char32_t> cps);

}  // namespace emojiseg

#endif  // EMOJISEG_EMOJI_SEGMENTER_HPP_

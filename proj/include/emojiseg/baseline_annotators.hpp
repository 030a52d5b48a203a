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

#ifndef EMOJISEG_BASELINE_ANNOTATORS_HPP_
#define EMOJISEG_BASELINE_ANNOTATORS_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojiseg/codepoint_registry.hpp"
#include "emojiseg/emoji_segmenter.hpp"
#include "emojiseg/eval_harness.hpp"

namespace emojiseg {

/// Emoji -> coarse POS lookup with a default class.
class PosLexicon {
 public:
  explicit PosLexicon(CoarsePos default_class = CoarsePos::kNoun) : default_class_(default_class) {}

  /// TSV rows `emoji<TAB>CLASS`. CLASS is a gold-eligible coarse class.
  static PosLexicon load(std::string_view data, std::string_view source = "<pos-lexicon>",
                         CoarsePos default_class = CoarsePos::kNoun);
  /// Punctuation-like emojis (‼ ⁉ ❓ ❔ ❗ ❕) map to Punctuation, the rest to Noun.
  static const PosLexicon& bundled();

  /// Whole-key lookup, then the first code point for ZWJ sequences, then the default.
  CoarsePos lookup(const EmojiSequence& seq) const;
  CoarsePos default_class() const noexcept { return default_class_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::vector<char32_t>, CoarsePos> entries_;
  CoarsePos default_class_;
};

/// Splits every token that contains emoji material at class boundaries
/// (emoji runs are segmented, whitespace inside a token is dropped). Tokens
/// without emojis pass through untouched. Idempotent.
std::vector<std::string> retokenize(const Registry& registry, std::span<const std::string> tokens);

CoarsePos heuristic_emoji_pos(const PosLexicon& lexicon, const EmojiSequence& seq);

/// Penn Treebank tag standing for a coarse class (NN, JJ, VB, RB, ".").
std::string_view penn_tag(CoarsePos pos) noexcept;

/// Tags a token stream the way a generic tagger would: a token that is exactly
/// one emoji gets its lexicon class, punctuation gets ".", numbers "CD" and
/// everything else, including tokens mixing emojis with text, "NN".
std::vector<TaggedToken> tag_tokens(const Registry& registry, const PosLexicon& lexicon,
                                    std::span<const std::string> tokens);

}  // namespace emojiseg

#endif  // EMOJISEG_BASELINE_ANNOTATORS_HPP_

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

#ifndef EMOJISEG_TWEET_TOKENIZER_HPP_
#define EMOJISEG_TWEET_TOKENIZER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojiseg/codepoint_registry.hpp"
#include "emojiseg/emoji_segmenter.hpp"

namespace emojiseg {

enum class TokenKind { kWord, kEmoji, kHashtag, kMention, kUrl, kNumber, kPunct };

/// Lower-case name used in JSON output ("word", "emoji", ...).
std::string_view to_string(TokenKind kind) noexcept;
std::optional<TokenKind> token_kind_from_string(std::string_view name) noexcept;

/// Half-open byte range into the tokenized text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;
  Span span;
  std::optional<EmojiSequence> emoji;  // set iff kind == kEmoji
};

/// Splits tweet text into tokens. Never fails: ill-formed UTF-8 and anything
/// unclassifiable ends up in Punct tokens. Whitespace is the only content that
/// is not covered by some token.
///
/// - Emoji: one token per sequence of segment_emoji_run, split from adjacent
///   words with or without spaces.
/// - Word: letters, digits and marks, with internal apostrophes.
/// - Number: digit runs with internal '.' or ',' and no letters.
/// - Hashtag / Mention: '#' or '@' plus a word body ('_' allowed).
/// - Url: http://, https:// or www. up to whitespace or an emoji.
/// - Punct: one character, or a run of the same character ("!!!").
std::vector<Token> tokenize(const Registry& registry, std::string_view text);

struct NormalizeOptions {
  bool drop_punct = true;
  bool hashtag_lenient = true;  // "#x" compares equal to "x"
  bool mention_lenient = false;  // same for "@x"
};

std::vector<std::string> normalize_tokens(std::span<const Token> tokens,
                                          const NormalizeOptions& options);

/// Same normalization for token strings produced elsewhere (gold files,
/// third-party tokenizers). Each string is classified by tokenizing it: all
/// Punct means punctuation, a single Hashtag/Mention token gets the lenient
/// treatment. Empty and whitespace-only strings are dropped.
std::vector<std::string> normalize_strings(const Registry& registry,
                                           std::span<const std::string> tokens,
                                           const NormalizeOptions& options);

}  // namespace emojiseg

#endif  // EMOJISEG_TWEET_TOKENIZER_HPP_

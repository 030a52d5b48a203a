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

#include "emojiseg/baseline_annotators.hpp"

#include <algorithm>
#include <utility>

#include "emojiseg/bundled_data.hpp"
#include "emojiseg/error.hpp"
#include "emojiseg/tweet_tokenizer.hpp"
#include "emojiseg/utf8.hpp"
#include "text_table.hpp"

namespace emojiseg {
namespace {

constexpr char32_t kZwj = 0x200D;

const EmojiSequence* single_emoji(const std::vector<Token>& tokens) {
  if (tokens.size() != 1 || !tokens[0].emoji || tokens[0].emoji->degenerate) return nullptr;
  return &*tokens[0].emoji;
}

}  // namespace

PosLexicon PosLexicon::load(std::string_view data, std::string_view source, CoarsePos default_class) {
  const std::string src(source);
  PosLexicon lexicon(default_class);
  detail::for_each_record(data, [&](std::size_t line, std::string_view text) {
    const auto fields = detail::split_tabs(text);
    if (fields.size() != 2) throw ParseError(src, line, "expected emoji<TAB>CLASS");
    auto key = lexicon_key(utf8::to_codepoints(fields[0]));
    if (key.empty()) throw ParseError(src, line, "empty emoji");
    const auto pos = coarse_pos_from_string(fields[1]);
    if (!pos || *pos == CoarsePos::kOther) {
      throw ParseError(src, line, "class must be Noun, Adjective, Verb, Adverb or Punctuation");
    }
    if (lexicon.entries_.contains(key)) throw ParseError(src, line, "duplicate emoji " + utf8::format_codepoints(key));
    lexicon.entries_.emplace(std::move(key), *pos);
  });
  return lexicon;
}

const PosLexicon& PosLexicon::bundled() {
  static const PosLexicon lexicon = load(bundled::emoji_pos(), "emoji-pos.tsv");
  return lexicon;
}

CoarsePos PosLexicon::lookup(const EmojiSequence& seq) const {
  auto key = lexicon_key(seq.codepoints);
  if (const auto it = entries_.find(key); it != entries_.end()) return it->second;
  if (seq.kind == SequenceKind::kZwjSequence) {
    key.erase(std::find(key.begin(), key.end(), kZwj), key.end());
    if (const auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  return default_class_;
}

std::vector<std::string> retokenize(const Registry& registry, std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    auto parts = tokenize(registry, token);
    const bool has_emoji =
        std::any_of(parts.begin(), parts.end(), [](const Token& t) { return t.kind == TokenKind::kEmoji; });
    if (!has_emoji) {
      out.push_back(token);
      continue;
    }
    for (auto& part : parts) out.push_back(std::move(part.text));
  }
  return out;
}

CoarsePos heuristic_emoji_pos(const PosLexicon& lexicon, const EmojiSequence& seq) { return lexicon.lookup(seq); }

std::string_view penn_tag(CoarsePos pos) noexcept {
  switch (pos) {
    case CoarsePos::kNoun:
      return "NN";
    case CoarsePos::kAdjective:
      return "JJ";
    case CoarsePos::kVerb:
      return "VB";
    case CoarsePos::kAdverb:
      return "RB";
    case CoarsePos::kPunctuation:
      return ".";
    case CoarsePos::kOther:
      break;
  }
  return "SYM";
}

std::vector<TaggedToken> tag_tokens(const Registry& registry, const PosLexicon& lexicon,
                                    std::span<const std::string> tokens) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto parts = tokenize(registry, token);
    std::string_view tag = "NN";
    if (const EmojiSequence* seq = single_emoji(parts)) {
      tag = penn_tag(heuristic_emoji_pos(lexicon, *seq));
    } else if (!parts.empty() && std::all_of(parts.begin(), parts.end(),
                                             [](const Token& t) { return t.kind == TokenKind::kPunct; })) {
      tag = ".";
    } else if (parts.size() == 1 && parts[0].kind == TokenKind::kNumber) {
      tag = "CD";
    }
    out.push_back({token, std::string(tag)});
  }
  return out;
}

}  // namespace emojiseg

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

#include "emojiseg/tweet_tokenizer.hpp"

#include <unicode/uchar.h>

#include <array>
#include <utility>

#include "emojiseg/utf8.hpp"

namespace emojiseg {
namespace {

using Cls = CodePointClass;

constexpr std::array<std::pair<TokenKind, std::string_view>, 7> kKindNames{{
    {TokenKind::kWord, "word"},
    {TokenKind::kEmoji, "emoji"},
    {TokenKind::kHashtag, "hashtag"},
    {TokenKind::kMention, "mention"},
    {TokenKind::kUrl, "url"},
    {TokenKind::kNumber, "number"},
    {TokenKind::kPunct, "punct"},
}};

constexpr std::array<std::string_view, 3> kUrlPrefixes = {"https://", "http://", "www."};

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

class Scanner {
 public:
  Scanner(const Registry& registry, std::string_view text)
      : registry_(registry), text_(text), cps_(utf8::decode(text)) {
    classes_.reserve(cps_.size());
    for (const auto& d : cps_) classes_.push_back(registry_.classify(d.cp));
  }

  std::vector<Token> run() {
    std::size_t i = 0;
    const std::size_t n = cps_.size();
    while (i < n) {
      if (is_space(i)) {
        ++i;
      } else if (emoji_start(i)) {
        i = scan_emoji_run(i);
      } else if (const std::size_t prefix = url_prefix(i); prefix != 0) {
        std::size_t j = i + prefix;
        while (j < n && !is_space(j) && !breaks_text(j)) ++j;
        emit(i, j, TokenKind::kUrl);
        i = j;
      } else if ((cp(i) == U'#' || cp(i) == U'@') && body_start(i + 1)) {
        const std::size_t j = scan_word(i + 1, /*tag_body=*/true);
        emit(i, j, cp(i) == U'#' ? TokenKind::kHashtag : TokenKind::kMention);
        i = j;
      } else if (word_char(i)) {
        const std::size_t j = scan_word(i, /*tag_body=*/false);
        emit(i, j, word_kind(i, j));
        i = j;
      } else {
        std::size_t j = i + 1;
        while (j < n && cp(j) == cp(i)) ++j;
        while (j < n && is_variation_selector(cls(j))) ++j;
        emit(i, j, TokenKind::kPunct);
        i = j;
      }
    }
    return std::move(tokens_);
  }

 private:
  char32_t cp(std::size_t i) const { return i < cps_.size() ? cps_[i].cp : 0; }
  Cls cls(std::size_t i) const { return i < classes_.size() ? classes_[i] : Cls::kNonEmoji; }
  std::uint32_t gc(std::size_t i) const { return i < cps_.size() ? U_GET_GC_MASK(cps_[i].cp) : 0; }

  bool is_space(std::size_t i) const { return u_isUWhiteSpace(static_cast<UChar32>(cp(i))); }
  bool is_letter(std::size_t i) const { return (gc(i) & U_GC_L_MASK) != 0; }
  bool is_digit(std::size_t i) const { return (gc(i) & U_GC_ND_MASK) != 0; }
  bool is_number(std::size_t i) const { return (gc(i) & U_GC_N_MASK) != 0; }
  bool word_char(std::size_t i) const {
    return i < cps_.size() && (gc(i) & (U_GC_L_MASK | U_GC_M_MASK | U_GC_N_MASK)) != 0 && !breaks_text(i);
  }

  bool keycap_at(std::size_t i) const {
    if (cls(i) != Cls::kKeycapBase) return false;
    if (cls(i + 1) == Cls::kCombiningKeycap) return true;
    return is_variation_selector(cls(i + 1)) && cls(i + 2) == Cls::kCombiningKeycap;
  }

  // A code point that opens an emoji run when a token would start here.
  bool emoji_start(std::size_t i) const {
    const Cls c = cls(i);
    if (c == Cls::kNonEmoji) return false;
    if (c == Cls::kKeycapBase) return keycap_at(i);
    return true;
  }

  // Inside a word or URL, selectors, joiners and the keycap mark do not end it.
  bool breaks_text(std::size_t i) const {
    const Cls c = cls(i);
    if (is_variation_selector(c) || c == Cls::kZeroWidthJoiner || c == Cls::kCombiningKeycap) return false;
    return emoji_start(i);
  }

  bool emoji_continue(std::size_t i) const {
    const Cls c = cls(i);
    return c != Cls::kNonEmoji && (c != Cls::kKeycapBase || keycap_at(i));
  }

  bool body_start(std::size_t i) const {
    return i < cps_.size() && (is_letter(i) || is_number(i) || cp(i) == U'_') && !breaks_text(i);
  }

  std::size_t url_prefix(std::size_t i) const {
    const std::string_view rest = text_.substr(cps_[i].offset);
    for (std::string_view prefix : kUrlPrefixes) {
      if (rest.size() < prefix.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < prefix.size() && match; ++k) {
        char ch = rest[k];
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
        match = ch == prefix[k];
      }
      if (match) return prefix.size();
    }
    return 0;
  }

  std::size_t scan_word(std::size_t i, bool tag_body) const {
    const std::size_t n = cps_.size();
    std::size_t j = i;
    while (j < n) {
      if (word_char(j) || (tag_body && cp(j) == U'_')) {
        ++j;
      } else if (j > i && cls(j) == Cls::kZeroWidthJoiner && word_char(j + 1)) {
        ++j;
      } else if (!tag_body && j > i && is_apostrophe(cp(j)) && (is_letter(j - 1) || is_number(j - 1)) &&
                 (is_letter(j + 1) || is_number(j + 1)) && !breaks_text(j + 1)) {
        ++j;
      } else if (!tag_body && j > i && (cp(j) == U'.' || cp(j) == U',') && is_digit(j - 1) &&
                 is_digit(j + 1) && !breaks_text(j + 1)) {
        ++j;
      } else {
        break;
      }
    }
    return j;
  }

  TokenKind word_kind(std::size_t i, std::size_t j) const {
    for (std::size_t k = i; k < j; ++k) {
      if (is_letter(k)) return TokenKind::kWord;
    }
    return is_number(i) ? TokenKind::kNumber : TokenKind::kWord;
  }

  std::size_t scan_emoji_run(std::size_t i) {
    std::size_t j = i;
    while (j < cps_.size() && (j == i || emoji_continue(j))) ++j;
    std::vector<char32_t> run;
    run.reserve(j - i);
    for (std::size_t k = i; k < j; ++k) run.push_back(cps_[k].cp);
    std::size_t k = i;
    for (auto& seq : segment_emoji_run(registry_, run)) {
      const std::size_t len = seq.codepoints.size();
      emit(k, k + len, TokenKind::kEmoji, std::move(seq));
      k += len;
    }
    return j;
  }

  void emit(std::size_t i, std::size_t j, TokenKind kind, std::optional<EmojiSequence> seq = std::nullopt) {
    const std::size_t begin = cps_[i].offset;
    const std::size_t end = cps_[j - 1].offset + cps_[j - 1].length;
    tokens_.push_back(Token{std::string(text_.substr(begin, end - begin)), kind, {begin, end}, std::move(seq)});
  }

  const Registry& registry_;
  std::string_view text_;
  std::vector<utf8::Decoded> cps_;
  std::vector<Cls> classes_;
  std::vector<Token> tokens_;
};

std::string_view strip_marker(std::string_view text) { return text.substr(1); }

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "word";
}

std::optional<TokenKind> token_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<Token> tokenize(const Registry& registry, std::string_view text) {
  return Scanner(registry, text).run();
}

std::vector<std::string> normalize_tokens(std::span<const Token> tokens, const NormalizeOptions& options) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token.kind == TokenKind::kPunct && options.drop_punct) continue;
    if ((token.kind == TokenKind::kHashtag && options.hashtag_lenient) ||
        (token.kind == TokenKind::kMention && options.mention_lenient)) {
      out.emplace_back(strip_marker(token.text));
    } else {
      out.push_back(token.text);
    }
  }
  return out;
}

std::vector<std::string> normalize_strings(const Registry& registry, std::span<const std::string> tokens,
                                           const NormalizeOptions& options) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& s : tokens) {
    const auto parts = tokenize(registry, s);
    if (parts.empty()) continue;
    const bool all_punct = std::all_of(parts.begin(), parts.end(),
                                       [](const Token& t) { return t.kind == TokenKind::kPunct; });
    if (all_punct && options.drop_punct) continue;
    if (parts.size() == 1 && parts[0].span == Span{0, s.size()} &&
        ((parts[0].kind == TokenKind::kHashtag && options.hashtag_lenient) ||
         (parts[0].kind == TokenKind::kMention && options.mention_lenient))) {
      out.emplace_back(strip_marker(s));
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace emojiseg

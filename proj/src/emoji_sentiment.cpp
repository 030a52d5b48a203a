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

#include "emojiseg/emoji_sentiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "emojiseg/bundled_data.hpp"
#include "emojiseg/error.hpp"
#include "emojiseg/utf8.hpp"
#include "text_table.hpp"

namespace emojiseg {
namespace {

constexpr std::array<std::pair<Polarity, std::string_view>, 3> kPolarityNames{{
    {Polarity::kNegative, "Negative"},
    {Polarity::kNeutral, "Neutral"},
    {Polarity::kPositive, "Positive"},
}};

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool ascii_iequal(std::string_view a, std::string_view b) { return ascii_lower(a) == ascii_lower(b); }

double fraction(std::string_view field, const std::string& source, std::size_t line) {
  const auto value = detail::parse_double(field);
  if (!value) throw ParseError(source, line, "malformed fraction '" + std::string(field) + "'");
  if (*value < 0.0 || *value > 1.0) {
    throw ParseError(source, line, "fraction " + std::string(field) + " outside [0,1]");
  }
  return *value;
}

}  // namespace

std::string_view to_string(Polarity polarity) noexcept {
  for (const auto& [p, name] : kPolarityNames) {
    if (p == polarity) return name;
  }
  return "Neutral";
}

std::optional<Polarity> polarity_from_string(std::string_view name) noexcept {
  for (const auto& [p, n] : kPolarityNames) {
    if (ascii_iequal(n, name)) return p;
  }
  return std::nullopt;
}

SentimentLexicon SentimentLexicon::load(std::string_view data, std::string_view source) {
  const std::string src(source);
  SentimentLexicon lexicon;
  detail::for_each_record(data, [&](std::size_t line, std::string_view text) {
    const auto fields = detail::split_tabs(text);
    if (fields.size() != 4) {
      throw ParseError(src, line, "expected 4 tab-separated fields, got " + std::to_string(fields.size()));
    }
    LexiconEntry entry;
    entry.emoji = lexicon_key(utf8::to_codepoints(fields[0]));
    if (entry.emoji.empty()) throw ParseError(src, line, "empty emoji");
    entry.p_neg = fraction(fields[1], src, line);
    entry.p_neut = fraction(fields[2], src, line);
    entry.p_pos = fraction(fields[3], src, line);
    const double sum = entry.p_neg + entry.p_neut + entry.p_pos;
    if (std::abs(sum - 1.0) > 1e-6) {
      throw ParseError(src, line, "fractions sum to " + std::to_string(sum) + ", not 1");
    }
    auto key = entry.emoji;
    if (lexicon.entries_.contains(key)) {
      throw ParseError(src, line, "duplicate emoji " + utf8::format_codepoints(key));
    }
    lexicon.entries_.emplace(std::move(key), std::move(entry));
  });
  return lexicon;
}

const SentimentLexicon& SentimentLexicon::bundled() {
  static const SentimentLexicon lexicon = load(bundled::emoji_sentiment(), "emoji-sentiment.tsv");
  return lexicon;
}

const LexiconEntry* SentimentLexicon::find(std::span<const char32_t> cps) const {
  const auto it = entries_.find(lexicon_key(cps));
  return it == entries_.end() ? nullptr : &it->second;
}

double emoji_polarity(const SentimentLexicon& lexicon, const EmojiSequence& seq) {
  const LexiconEntry* entry = lexicon.find(seq.codepoints);
  return entry ? entry->score() : 0.0;
}

WordValenceScorer WordValenceScorer::load(std::string_view data, std::string_view source) {
  const std::string src(source);
  WordValenceScorer scorer;
  detail::for_each_record(data, [&](std::size_t line, std::string_view text) {
    const auto fields = detail::split_tabs(text);
    if (fields.size() != 2 || fields[0].empty()) throw ParseError(src, line, "expected word<TAB>valence");
    const auto value = detail::parse_double(fields[1]);
    if (!value || *value < -1.0 || *value > 1.0) {
      throw ParseError(src, line, "valence must be a number in [-1,1]");
    }
    if (!scorer.valence_.emplace(ascii_lower(fields[0]), *value).second) {
      throw ParseError(src, line, "duplicate word '" + std::string(fields[0]) + "'");
    }
  });
  return scorer;
}

const WordValenceScorer& WordValenceScorer::bundled() {
  static const WordValenceScorer scorer = load(bundled::word_valence(), "word-valence.tsv");
  return scorer;
}

double WordValenceScorer::operator()(std::span<const Token> tokens) const {
  double sum = 0;
  std::size_t known = 0;
  for (const auto& token : tokens) {
    std::string_view word = token.text;
    if (token.kind == TokenKind::kHashtag) {
      word.remove_prefix(1);
    } else if (token.kind != TokenKind::kWord) {
      continue;
    }
    const auto it = valence_.find(ascii_lower(word));
    if (it == valence_.end()) continue;
    sum += it->second;
    ++known;
  }
  return known == 0 ? 0.0 : sum / static_cast<double>(known);
}

SentimentResult analyze(const Registry& registry, const SentimentLexicon& lexicon, std::string_view text,
                        const SentimentOptions& options, const TextScorer& text_scorer) {
  const auto tokens = tokenize(registry, text);
  SentimentResult result;
  result.text_score = std::clamp(text_scorer(tokens), -1.0, 1.0);

  double emoji_sum = 0;
  for (const auto& token : tokens) {
    if (!token.emoji || token.emoji->degenerate || token.emoji->kind == SequenceKind::kStandaloneModifier) {
      continue;
    }
    emoji_sum += emoji_polarity(lexicon, *token.emoji);
    ++result.emoji_count;
  }
  if (result.emoji_count > 0) result.emoji_score = emoji_sum / static_cast<double>(result.emoji_count);

  result.combined_score =
      std::clamp(options.text_weight * result.text_score + options.emoji_weight * result.emoji_score, -1.0, 1.0);
  result.polarity = polarity_of(result.combined_score, options.threshold);
  return result;
}

SentimentResult analyze(const Registry& registry, const SentimentLexicon& lexicon, std::string_view text,
                        const SentimentOptions& options) {
  const WordValenceScorer& scorer = WordValenceScorer::bundled();
  return analyze(registry, lexicon, text, options, [&scorer](std::span<const Token> tokens) { return scorer(tokens); });
}

}  // namespace emojiseg

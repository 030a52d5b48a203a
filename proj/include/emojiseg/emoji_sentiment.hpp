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

#ifndef EMOJISEG_EMOJI_SENTIMENT_HPP_
#define EMOJISEG_EMOJI_SENTIMENT_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojiseg/codepoint_registry.hpp"
#include "emojiseg/emoji_segmenter.hpp"
#include "emojiseg/tweet_tokenizer.hpp"

namespace emojiseg {

enum class Polarity { kNegative, kNeutral, kPositive };

std::string_view to_string(Polarity polarity) noexcept;
std::optional<Polarity> polarity_from_string(std::string_view name) noexcept;

inline constexpr double kDefaultPolarityThreshold = 0.1;

/// score >= threshold is Positive, score <= -threshold is Negative.
constexpr Polarity polarity_of(double score, double threshold = kDefaultPolarityThreshold) noexcept {
  if (score >= threshold) return Polarity::kPositive;
  if (score <= -threshold) return Polarity::kNegative;
  return Polarity::kNeutral;
}

struct LexiconEntry {
  std::vector<char32_t> emoji;  // lexicon_key() form
  double p_neg = 0;
  double p_neut = 0;
  double p_pos = 0;

  double score() const noexcept { return p_pos - p_neg; }
};

/// Emoji polarity lexicon keyed by tone- and selector-stripped code points.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  /// TSV rows `emoji<TAB>p_neg<TAB>p_neut<TAB>p_pos`, '#' comments. Fractions
  /// must lie in [0,1] and sum to 1 within 1e-6; duplicate keys are rejected.
  static SentimentLexicon load(std::string_view data, std::string_view source = "<lexicon>");
  static const SentimentLexicon& bundled();

  const LexiconEntry* find(std::span<const char32_t> cps) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::vector<char32_t>, LexiconEntry> entries_;
};

inline SentimentLexicon load_lexicon(std::string_view data,
                                     std::string_view source = "<lexicon>") {
  return SentimentLexicon::load(data, source);
}

/// p_pos - p_neg of the sequence's entry, 0 when unknown.
double emoji_polarity(const SentimentLexicon& lexicon, const EmojiSequence& seq);

/// Scores the non-emoji part of a text in [-1, 1].
using TextScorer = std::function<double(std::span<const Token>)>;

/// Small word valence list: the text score is the mean valence of the words it
/// knows, 0 when it knows none.
class WordValenceScorer {
 public:
  WordValenceScorer() = default;

  /// TSV rows `word<TAB>valence`, valence in [-1,1]. Words are matched
  /// ASCII-case-insensitively.
  static WordValenceScorer load(std::string_view data, std::string_view source = "<valence>");
  static const WordValenceScorer& bundled();

  double operator()(std::span<const Token> tokens) const;
  std::size_t size() const noexcept { return valence_.size(); }

 private:
  std::map<std::string, double, std::less<>> valence_;
};

struct SentimentOptions {
  double text_weight = 1.0;
  double emoji_weight = 1.0;
  double threshold = kDefaultPolarityThreshold;
};

struct SentimentResult {
  double text_score = 0;
  double emoji_score = 0;  // mean over emoji tokens, 0 when there are none
  double combined_score = 0;
  Polarity polarity = Polarity::kNeutral;
  std::size_t emoji_count = 0;
};

/// combined = clamp(text_weight * text + emoji_weight * emoji, -1, 1).
/// Standalone tone swatches and degenerate code points are not emojis here.
SentimentResult analyze(const Registry& registry, const SentimentLexicon& lexicon,
                        std::string_view text, const SentimentOptions& options,
                        const TextScorer& text_scorer);

SentimentResult analyze(const Registry& registry, const SentimentLexicon& lexicon,
                        std::string_view text, const SentimentOptions& options = {});

}  // namespace emojiseg

#endif  // EMOJISEG_EMOJI_SENTIMENT_HPP_

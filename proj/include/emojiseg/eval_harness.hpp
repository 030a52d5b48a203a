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

// Conformance scoring for tokenizers, emoji POS taggers and sentiment
// predictors. Every scorer reports per-category success percentages plus an
// average weighted by category size.

#ifndef EMOJISEG_EVAL_HARNESS_HPP_
#define EMOJISEG_EVAL_HARNESS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "emojiseg/codepoint_registry.hpp"
#include "emojiseg/emoji_sentiment.hpp"
#include "emojiseg/tweet_tokenizer.hpp"

namespace emojiseg {

// ---------------------------------------------------------------------------
// Reports

struct CategoryScore {
  std::string name;   // "Case 3", "Noun", "NS"
  std::string label;  // short column label: "STE", "Noun", "NS"
  std::size_t count = 0;
  std::size_t passed = 0;
  std::vector<std::string> failed_ids;

  /// 100 * passed / count; 0 for an empty category.
  double pct() const noexcept;
};

struct Report {
  std::string title;
  std::vector<CategoryScore> categories;
  std::vector<std::string> flagged;  // notes such as unlocated POS targets

  std::size_t total() const noexcept;
  std::size_t passed() const noexcept;
  /// 100 * total passes / total cases.
  double average() const noexcept;
};

/// Rounds half away from zero to one decimal, as reports print.
double round1(double pct) noexcept;

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& json);
/// Aligned plain-text table: one column per category plus Average.
std::string render_report_table(const Report& report);

// ---------------------------------------------------------------------------
// Tokenization

enum class EmojiCase { kCase1 = 1, kCase2, kCase3, kCase4, kCase5, kCase6 };

inline constexpr int kEmojiCaseCount = 6;

/// Accepts "Case1", "Case 1", "1".
std::optional<EmojiCase> emoji_case_from_string(std::string_view name) noexcept;
std::string case_name(EmojiCase c);
/// SE, GE, STE, BMP, SMP, ZWJ.
std::string_view case_label(EmojiCase c) noexcept;

struct GoldTokenExample {
  std::string id;
  std::string text;
  std::vector<std::string> gold_tokens;
  EmojiCase emoji_case = EmojiCase::kCase1;
};

using TokenPredictions = std::map<std::string, std::vector<std::string>>;

/// JSONL `{"id","text","case","gold_tokens":[...]}`. Duplicate ids are a ParseError.
std::vector<GoldTokenExample> load_gold_tokens(std::string_view data,
                                               std::string_view source = "<gold>");
/// JSONL `{"id","tokens":[...]}`; tokens may be strings or objects with "text".
TokenPredictions load_token_predictions(std::string_view data,
                                        std::string_view source = "<predictions>");

/// A tweet passes iff the normalized prediction equals the normalized gold.
/// Throws MissingPredictionError for a gold id without prediction.
Report score_tokens(const Registry& registry, const std::vector<GoldTokenExample>& golds,
                    const TokenPredictions& preds, const NormalizeOptions& options = {});

// ---------------------------------------------------------------------------
// Part of speech

enum class CoarsePos { kNoun, kAdjective, kVerb, kAdverb, kPunctuation, kOther };

inline constexpr int kGoldPosClassCount = 5;  // kOther is a prediction bucket only

std::string_view to_string(CoarsePos pos) noexcept;
/// Case-insensitive; also accepts the NOUN/ADJ/VERB/ADV/PUNCT spellings.
std::optional<CoarsePos> coarse_pos_from_string(std::string_view name) noexcept;

enum class Tagset { kPennTreebank, kUniversalPos };

std::string_view to_string(Tagset tagset) noexcept;
std::optional<Tagset> tagset_from_string(std::string_view name) noexcept;

/// NN* / NOUN / PROPN -> Noun, JJ* / ADJ -> Adjective, VB* / VERB / AUX -> Verb,
/// RB* / ADV -> Adverb, punctuation tags / PUNCT -> Punctuation, any other
/// known tag -> Other. Throws UnknownTagError for tags outside the tagset.
CoarsePos map_to_coarse(Tagset tagset, std::string_view tag);

struct PosTarget {
  std::string text;
  std::size_t occurrence = 0;  // 0-based among equal targets in the tweet
  CoarsePos gold = CoarsePos::kNoun;
};

struct GoldPosExample {
  std::string id;
  std::string text;
  std::vector<PosTarget> targets;
};

struct TaggedToken {
  std::string text;
  std::string tag;
};

struct PosPredictions {
  Tagset tagset = Tagset::kPennTreebank;
  std::map<std::string, std::vector<TaggedToken>> tagged;
};

/// JSONL `{"id","text","targets":[{"text","occurrence","gold"}]}`.
std::vector<GoldPosExample> load_gold_pos(std::string_view data, std::string_view source = "<gold>");
/// Header line `{"tagset": ...}` then `{"id","tagged":[{"text","tag"}]}` lines.
PosPredictions load_pos_predictions(std::string_view data,
                                    std::string_view source = "<predictions>");

/// Only emoji targets are scored. A target's prediction is the predicted token
/// holding its occurrence; tokens are searched by re-tokenizing them, so a
/// merged token like "? 🌟 🤖" still yields a prediction for each emoji in it.
/// Targets found in no token are counted wrong and listed in Report::flagged.
Report score_pos(const Registry& registry, const std::vector<GoldPosExample>& golds,
                 const PosPredictions& preds);

// ---------------------------------------------------------------------------
// Sentiment

enum class SentimentCondition { kNeutralSentence, kPositiveEmoji, kNegativeEmoji };

/// "NS", "PosEmoji", "NegEmoji" (also "+ve" / "-ve").
std::optional<SentimentCondition> condition_from_string(std::string_view name) noexcept;
std::string_view to_string(SentimentCondition condition) noexcept;

struct SentimentExample {
  std::string id;
  std::string text;
  SentimentCondition condition = SentimentCondition::kNeutralSentence;
  Polarity gold = Polarity::kNeutral;
};

using SentimentPredictions = std::map<std::string, Polarity>;

/// JSONL `{"id","text","condition","gold"}`.
std::vector<SentimentExample> load_sentiment_suite(std::string_view data,
                                                   std::string_view source = "<gold>");
/// JSONL `{"id","polarity",...}` as written by the sentiment command.
SentimentPredictions load_sentiment_predictions(std::string_view data,
                                                std::string_view source = "<predictions>");

Report score_sentiment(const std::vector<SentimentExample>& examples,
                       const SentimentPredictions& preds);

// ---------------------------------------------------------------------------
// Support matrix

inline constexpr double kDefaultSupportThreshold = 50.0;

struct SupportMatrix {
  double threshold = kDefaultSupportThreshold;
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<bool>>> rows;
};

/// A cell is supported iff the category pct >= threshold. Reports must share
/// their category list; a mismatch throws Error.
SupportMatrix render_support_matrix(const std::map<std::string, Report>& reports,
                                    double threshold = kDefaultSupportThreshold);

std::string render_matrix_table(const SupportMatrix& matrix);
nlohmann::json matrix_to_json(const SupportMatrix& matrix);

}  // namespace emojiseg

#endif  // EMOJISEG_EVAL_HARNESS_HPP_

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

#ifndef EMOJISEG_CASE_CLASSIFIER_HPP_
#define EMOJISEG_CASE_CLASSIFIER_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

#include "emojiseg/codepoint_registry.hpp"

namespace emojiseg {

inline constexpr std::size_t kToneCount = 5;

/// Light .. Dark, indexed 0..4.
constexpr std::size_t tone_index(char32_t tone) noexcept { return tone - 0x1F3FB; }
std::string_view tone_name(std::size_t index) noexcept;

/// Emoji-use labels for one tweet.
///
/// "Emoji" below means an Emoji token that is neither a standalone skin tone
/// swatch nor a degenerate code point. Swatches still count for skin tone
/// presence and tone_counts.
struct CaseLabels {
  bool single_emoji_spaced = false;    // exactly one emoji, whitespace on both sides
  bool single_emoji_unspaced = false;  // exactly one emoji, touching other text
  bool multi_positions = false;        // emojis separated by other tokens
  bool multi_spaced = false;           // consecutive emojis separated by whitespace only
  bool multi_cluster = false;          // two emojis with adjacent spans
  bool skin_tone_present = false;
  bool bmp_emoji_present = false;      // an emoji entirely in plane 0
  bool non_bmp_emoji_present = false;  // an emoji reaching beyond plane 0
  bool zwj_present = false;
  std::array<std::size_t, kToneCount> tone_counts{};  // occurrences per tone
  std::size_t emoji_count = 0;

  bool any() const noexcept;
  bool single() const noexcept { return single_emoji_spaced || single_emoji_unspaced; }
  bool multiple() const noexcept { return multi_positions || multi_spaced || multi_cluster; }
};

CaseLabels classify_tweet(const Registry& registry, std::string_view text);

/// Corpus-level counts. Per-tone counts are tweets containing the tone at
/// least once, so they may sum to more than skin_tone.
struct StatsReport {
  std::size_t total = 0;
  std::size_t unique = 0;
  std::size_t emoji_tweets = 0;
  std::size_t single = 0;
  std::size_t multiple = 0;
  std::size_t skin_tone = 0;
  std::array<std::size_t, kToneCount> per_tone{};
  std::size_t zwj = 0;

  /// 100 * count / total, 0 for an empty corpus.
  double percent(std::size_t count) const noexcept;
};

/// One-pass aggregation. Accumulators over disjoint partitions can be merged
/// in any grouping.
class StatsAccumulator {
 public:
  void add(const Registry& registry, std::string_view text);
  void add(std::string_view text, const CaseLabels& labels);
  void merge(const StatsAccumulator& other);
  StatsReport report() const;

 private:
  StatsReport counts_;
  std::unordered_set<std::string> seen_;
};

template <typename Range>
StatsReport corpus_stats(const Registry& registry, const Range& texts) {
  StatsAccumulator acc;
  for (const auto& text : texts) acc.add(registry, text);
  return acc.report();
}

/// Aligned plain-text table with Tweets / Count / % columns.
std::string render_stats_table(const StatsReport& report);

}  // namespace emojiseg

#endif  // EMOJISEG_CASE_CLASSIFIER_HPP_

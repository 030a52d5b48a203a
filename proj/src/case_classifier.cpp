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

#include "emojiseg/case_classifier.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

#include "emojiseg/tweet_tokenizer.hpp"
#include "emojiseg/utf8.hpp"

namespace emojiseg {
namespace {

constexpr std::array<std::string_view, kToneCount> kToneNames = {
    "Light", "Medium Light", "Medium", "Medium Dark", "Dark"};

bool counts_as_emoji(const Token& token) {
  return token.kind == TokenKind::kEmoji && token.emoji && !token.emoji->degenerate &&
         token.emoji->kind != SequenceKind::kStandaloneModifier;
}

// Whitespace test for the code point ending right before / starting at a byte offset.
class Boundaries {
 public:
  explicit Boundaries(std::string_view text) : cps_(utf8::decode(text)), size_(text.size()) {}

  bool space_before(std::size_t offset) const {
    if (offset == 0) return true;
    auto it = std::lower_bound(cps_.begin(), cps_.end(), offset,
                               [](const utf8::Decoded& d, std::size_t off) { return d.offset < off; });
    return it != cps_.begin() && is_space(std::prev(it)->cp);
  }

  bool space_after(std::size_t offset) const {
    if (offset >= size_) return true;
    auto it = std::lower_bound(cps_.begin(), cps_.end(), offset,
                               [](const utf8::Decoded& d, std::size_t off) { return d.offset < off; });
    return it != cps_.end() && is_space(it->cp);
  }

 private:
  static bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

  std::vector<utf8::Decoded> cps_;
  std::size_t size_;
};

}  // namespace

std::string_view tone_name(std::size_t index) noexcept {
  return index < kToneCount ? kToneNames[index] : std::string_view{};
}

bool CaseLabels::any() const noexcept {
  return single_emoji_spaced || single_emoji_unspaced || multi_positions || multi_spaced ||
         multi_cluster || skin_tone_present || bmp_emoji_present || non_bmp_emoji_present ||
         zwj_present;
}

CaseLabels classify_tweet(const Registry& registry, std::string_view text) {
  CaseLabels labels;
  const auto tokens = tokenize(registry, text);

  std::vector<std::size_t> emojis;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (token.kind != TokenKind::kEmoji || !token.emoji) continue;
    for (char32_t tone : token.emoji->skin_tones) {
      ++labels.tone_counts[tone_index(tone)];
      labels.skin_tone_present = true;
    }
    if (!counts_as_emoji(token)) continue;
    emojis.push_back(i);
    if (token.emoji->kind == SequenceKind::kZwjSequence) labels.zwj_present = true;
    if (token.emoji->max_plane.index == 0) {
      labels.bmp_emoji_present = true;
    } else {
      labels.non_bmp_emoji_present = true;
    }
  }
  labels.emoji_count = emojis.size();

  if (emojis.size() == 1) {
    const Boundaries bounds(text);
    const Span span = tokens[emojis.front()].span;
    if (bounds.space_before(span.begin) && bounds.space_after(span.end)) {
      labels.single_emoji_spaced = true;
    } else {
      labels.single_emoji_unspaced = true;
    }
  }

  for (std::size_t k = 1; k < emojis.size(); ++k) {
    const std::size_t a = emojis[k - 1];
    const std::size_t b = emojis[k];
    const bool text_between = std::any_of(tokens.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                                          tokens.begin() + static_cast<std::ptrdiff_t>(b),
                                          [](const Token& t) { return t.kind != TokenKind::kEmoji; });
    if (text_between) {
      labels.multi_positions = true;
    } else if (tokens[a].span.end == tokens[b].span.begin) {
      labels.multi_cluster = true;
    } else {
      labels.multi_spaced = true;
    }
  }
  return labels;
}

double StatsReport::percent(std::size_t count) const noexcept {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

void StatsAccumulator::add(const Registry& registry, std::string_view text) {
  add(text, classify_tweet(registry, text));
}

void StatsAccumulator::add(std::string_view text, const CaseLabels& labels) {
  ++counts_.total;
  seen_.emplace(text);
  counts_.unique = seen_.size();
  if (labels.single() || labels.multiple()) ++counts_.emoji_tweets;
  if (labels.single()) ++counts_.single;
  if (labels.multiple()) ++counts_.multiple;
  if (labels.skin_tone_present) ++counts_.skin_tone;
  for (std::size_t t = 0; t < kToneCount; ++t) {
    if (labels.tone_counts[t] > 0) ++counts_.per_tone[t];
  }
  if (labels.zwj_present) ++counts_.zwj;
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
  counts_.total += other.counts_.total;
  counts_.emoji_tweets += other.counts_.emoji_tweets;
  counts_.single += other.counts_.single;
  counts_.multiple += other.counts_.multiple;
  counts_.skin_tone += other.counts_.skin_tone;
  for (std::size_t t = 0; t < kToneCount; ++t) counts_.per_tone[t] += other.counts_.per_tone[t];
  counts_.zwj += other.counts_.zwj;
  seen_.insert(other.seen_.begin(), other.seen_.end());
  counts_.unique = seen_.size();
}

StatsReport StatsAccumulator::report() const { return counts_; }

std::string render_stats_table(const StatsReport& report) {
  std::vector<std::pair<std::string, std::size_t>> rows = {
      {"Total", report.total},
      {"Unique", report.unique},
      {"Only single emoji", report.single},
      {"Multiple emojis", report.multiple},
      {"Skin tone", report.skin_tone},
  };
  for (std::size_t t = 0; t < kToneCount; ++t) rows.emplace_back("  " + std::string(kToneNames[t]), report.per_tone[t]);
  rows.emplace_back("ZWJ", report.zwj);

  std::size_t name_width = 6;
  std::size_t count_width = 5;
  for (const auto& [name, count] : rows) {
    name_width = std::max(name_width, name.size());
    count_width = std::max(count_width, std::to_string(count).size());
  }

  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %*s  %7s\n", static_cast<int>(name_width), "Tweets",
                static_cast<int>(count_width), "Count", "%");
  out += line;
  for (const auto& [name, count] : rows) {
    std::snprintf(line, sizeof line, "%-*s  %*zu  %7.2f\n", static_cast<int>(name_width), name.c_str(),
                  static_cast<int>(count_width), count, report.percent(count));
    out += line;
  }
  return out;
}

}  // namespace emojiseg

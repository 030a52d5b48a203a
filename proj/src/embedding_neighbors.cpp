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

#include "emojiseg/embedding_neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "emojiseg/error.hpp"
#include "emojiseg/tweet_tokenizer.hpp"
#include "text_table.hpp"

namespace emojiseg {
namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<EmojiSequence> as_single_emoji(const Registry& registry, std::string_view token) {
  auto tokens = tokenize(registry, token);
  if (tokens.size() != 1 || !tokens[0].emoji || tokens[0].emoji->degenerate) return std::nullopt;
  return std::move(tokens[0].emoji);
}

std::set<char32_t> tone_set(const EmojiSequence& seq) { return {seq.skin_tones.begin(), seq.skin_tones.end()}; }

}  // namespace

EmbeddingTable EmbeddingTable::load(std::string_view data, std::string_view source) {
  const std::string src(source);
  EmbeddingTable table;
  std::size_t expected = 0;
  bool have_header = false;
  std::size_t last_line = 0;

  std::size_t line_no = 0;
  while (!data.empty()) {
    const auto nl = data.find('\n');
    std::string_view line = data.substr(0, nl);
    data = nl == std::string_view::npos ? std::string_view{} : data.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_spaces(line);
    if (fields.empty()) continue;
    last_line = line_no;

    if (!have_header) {
      const auto count = fields.size() == 2 ? detail::parse_double(fields[0]) : std::nullopt;
      const auto dim = fields.size() == 2 ? detail::parse_double(fields[1]) : std::nullopt;
      if (!count || !dim || *count < 0 || *dim < 1 || *count != std::floor(*count) || *dim != std::floor(*dim)) {
        throw ParseError(src, line_no, "expected header 'count dimension'");
      }
      expected = static_cast<std::size_t>(*count);
      table.dimension_ = static_cast<std::size_t>(*dim);
      have_header = true;
      continue;
    }

    const std::string token(fields[0]);
    if (fields.size() - 1 != table.dimension_) {
      throw ParseError(src, line_no, "token '" + token + "' has " + std::to_string(fields.size() - 1) +
                                         " components, expected " + std::to_string(table.dimension_));
    }
    std::vector<double> vec;
    vec.reserve(table.dimension_);
    double norm = 0;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto v = detail::parse_double(fields[i]);
      if (!v || !std::isfinite(*v)) throw ParseError(src, line_no, "malformed component '" + std::string(fields[i]) + "'");
      vec.push_back(*v);
      norm += *v * *v;
    }
    if (norm == 0) throw ParseError(src, line_no, "zero vector for token '" + token + "'");
    if (table.index_.contains(token)) throw ParseError(src, line_no, "duplicate token '" + token + "'");
    table.index_.emplace(token, table.tokens_.size());
    table.tokens_.push_back(token);
    table.vectors_.push_back(std::move(vec));
  }
  if (!have_header) throw ParseError(src, 1, "missing header line");
  if (table.tokens_.size() != expected) {
    throw ParseError(src, last_line, "header announces " + std::to_string(expected) + " rows, found " +
                                         std::to_string(table.tokens_.size()));
  }
  return table;
}

const std::vector<double>* EmbeddingTable::find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

double cosine(std::span<const double> a, std::span<const double> b) noexcept {
  double dot = 0;
  double na = 0;
  double nb = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::vector<Neighbor> nearest(const EmbeddingTable& table, const Registry& registry, std::string_view token,
                              std::size_t k, NeighborFilter filter) {
  const std::vector<double>* query = table.find(token);
  if (!query) throw UnknownTokenError("token '" + std::string(token) + "' is not in the embedding table");
  if (k == 0) throw Error("k must be at least 1");

  std::vector<Neighbor> all;
  for (const auto& other : table.tokens()) {
    if (other == token) continue;
    if (filter == NeighborFilter::kEmojiOnly && !as_single_emoji(registry, other)) continue;
    all.push_back({other, cosine(*query, *table.find(other))});
  }
  const std::size_t keep = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    [](const Neighbor& a, const Neighbor& b) {
                      if (a.cosine != b.cosine) return a.cosine > b.cosine;
                      return a.token < b.token;
                    });
  all.resize(keep);
  return all;
}

double skin_tone_consistency(const EmbeddingTable& table, const Registry& registry, std::string_view token,
                             std::size_t k) {
  if (!table.find(token)) throw UnknownTokenError("token '" + std::string(token) + "' is not in the embedding table");
  const auto seq = as_single_emoji(registry, token);
  if (!seq || seq->skin_tones.empty()) throw NotTonedError("'" + std::string(token) + "' carries no skin tone");
  const auto tones = tone_set(*seq);

  std::size_t same = 0;
  for (const auto& n : nearest(table, registry, token, k, NeighborFilter::kEmojiOnly)) {
    if (tone_set(*as_single_emoji(registry, n.token)) == tones) ++same;
  }
  return static_cast<double>(same) / static_cast<double>(k);
}

}  // namespace emojiseg

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

#ifndef EMOJISEG_EMBEDDING_NEIGHBORS_HPP_
#define EMOJISEG_EMBEDDING_NEIGHBORS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emojiseg/codepoint_registry.hpp"

namespace emojiseg {

/// Token vectors in word2vec text format.
class EmbeddingTable {
 public:
  /// First line `count dimension`, then `token v1 ... vd` per line. Rejects
  /// dimension mismatches, duplicate tokens, zero vectors and a row count
  /// different from the header.
  static EmbeddingTable load(std::string_view data, std::string_view source = "<embeddings>");

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  /// nullptr when absent.
  const std::vector<double>* find(std::string_view token) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> tokens_;
  std::vector<std::vector<double>> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline EmbeddingTable load_embeddings(std::string_view data,
                                      std::string_view source = "<embeddings>") {
  return EmbeddingTable::load(data, source);
}

double cosine(std::span<const double> a, std::span<const double> b) noexcept;

enum class NeighborFilter { kAll, kEmojiOnly };

struct Neighbor {
  std::string token;
  double cosine = 0;
};

/// Top-k by cosine, query excluded, ties broken by token byte order. The
/// emoji filter keeps tokens that parse as exactly one non-degenerate emoji.
/// Throws UnknownTokenError; k must be at least 1.
std::vector<Neighbor> nearest(const EmbeddingTable& table, const Registry& registry,
                              std::string_view token, std::size_t k,
                              NeighborFilter filter = NeighborFilter::kAll);

/// Share of the top-k emoji neighbours whose set of skin tones equals the
/// query's. Missing neighbours (fewer than k emojis) count as mismatches.
/// Throws UnknownTokenError, or NotTonedError when the query has no tone.
double skin_tone_consistency(const EmbeddingTable& table, const Registry& registry,
                             std::string_view token, std::size_t k);

}  // namespace emojiseg

#endif  // EMOJISEG_EMBEDDING_NEIGHBORS_HPP_

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "emojiseg/error.hpp"
#include "emojiseg/utf8.hpp"
#include "support/test_support.hpp"

namespace emojiseg {
namespace {

const Registry& reg() { return Registry::bundled(); }

constexpr std::string_view kFour =
    "4 3\n"
    "a 1 0 0\n"
    "b 1 1 0\n"
    "c 0 1 0\n"
    "d -1 0 0.5\n";

TEST(LoadEmbeddingsTest, Basic) {
  const auto t = load_embeddings(kFour);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.dimension(), 3u);
  ASSERT_NE(t.find("b"), nullptr);
  EXPECT_EQ(*t.find("b"), (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(t.find("zzz"), nullptr);
}

TEST(LoadEmbeddingsTest, Errors) {
  auto error_of = [](std::string_view data) -> std::string {
    try {
      load_embeddings(data, "e.txt");
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(error_of("1 3\na 1 0\n").find("a"), std::string::npos);
  EXPECT_NE(error_of("2 2\nclap 1 0\nclap 0 1\n").find("clap"), std::string::npos);
  EXPECT_NE(error_of("1 2\na 0 0\n"), "");
  EXPECT_NE(error_of("2 2\na 1 0\n"), "");
  EXPECT_NE(error_of("1 2\na 1 x\n"), "");
  EXPECT_NE(error_of("1 2\na 1 nan\n"), "");
  EXPECT_NE(error_of("x\n"), "");
}

TEST(CosineTest, Properties) {
  std::mt19937 rng(8);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(5), b(5);
    for (auto& x : a) x = normal(rng);
    for (auto& x : b) x = normal(rng);
    const double ab = cosine(a, b);
    EXPECT_GE(ab, -1.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_DOUBLE_EQ(ab, cosine(b, a));
    EXPECT_NEAR(cosine(a, a), 1.0, 1e-12);
  }
}

std::vector<Neighbor> brute_force(const EmbeddingTable& t, const std::string& q) {
  std::vector<Neighbor> all;
  const auto& qv = *t.find(q);
  for (const auto& tok : t.tokens()) {
    if (tok == q) continue;
    const auto& v = *t.find(tok);
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      dot += qv[i] * v[i];
      na += qv[i] * qv[i];
      nb += v[i] * v[i];
    }
    all.push_back({tok, dot / std::sqrt(na * nb)});
  }
  std::stable_sort(all.begin(), all.end(), [](const Neighbor& x, const Neighbor& y) {
    return x.cosine != y.cosine ? x.cosine > y.cosine : x.token < y.token;
  });
  return all;
}

TEST(NearestTest, FourTokenBruteForce) {
  const auto t = load_embeddings(kFour);
  const auto got = nearest(t, reg(), "a", 3);
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].token, "b");
  EXPECT_NEAR(got[0].cosine, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(got[1].token, "c");
  EXPECT_NEAR(got[1].cosine, 0.0, 1e-12);
  EXPECT_EQ(got[2].token, "d");
  EXPECT_NEAR(got[2].cosine, -1 / std::sqrt(1.25), 1e-12);
  for (const auto* q : {"a", "b", "c", "d"}) {
    const auto want = brute_force(t, q);
    const auto have = nearest(t, reg(), q, 10);
    ASSERT_EQ(have.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(have[i].token, want[i].token);
      EXPECT_NEAR(have[i].cosine, want[i].cosine, 1e-12);
    }
  }
}

TEST(NearestTest, DuplicateVectorRanksFirst) {
  const auto t = load_embeddings("3 2\nq 0.3 0.4\ntwin 0.3 0.4\nz 1 0\n");
  const auto got = nearest(t, reg(), "q", 1);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].token, "twin");
  EXPECT_DOUBLE_EQ(got[0].cosine, 1.0);
}

TEST(NearestTest, TiesBreakByToken) {
  const auto t = load_embeddings("4 2\nq 1 0\nc 1 1\nb 1 1\na 1 -1\n");
  const auto got = nearest(t, reg(), "q", 3);
  EXPECT_EQ(got[0].token, "a");
  EXPECT_EQ(got[1].token, "b");
  EXPECT_EQ(got[2].token, "c");
}

TEST(NearestTest, EmojiFilterAndErrors) {
  const auto t = load_embeddings("4 2\n👍 1 0\nthumbs 1 0.01\n👍🏽 1 0.1\n👍x 1 0.001\n");
  const auto got = nearest(t, reg(), "👍", 5, NeighborFilter::kEmojiOnly);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].token, "👍🏽");
  EXPECT_THROW(nearest(t, reg(), "nope", 1), UnknownTokenError);
  EXPECT_THROW(nearest(t, reg(), "👍", 0), Error);
}

TEST(NearestTest, NonIncreasingOnFixture) {
  const auto t = load_embeddings(testing::read_suite("embeddings_fixture.txt"));
  for (const auto& q : t.tokens()) {
    const auto got = nearest(t, reg(), q, t.size());
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(got[i - 1].cosine, got[i].cosine);
  }
}

TEST(ConsistencyTest, SmallCases) {
  const auto twin = load_embeddings("3 2\n👍🏽 1 0\n👏🏽 1 0\n👏🏿 0 1\n");
  EXPECT_EQ(skin_tone_consistency(twin, reg(), "👍🏽", 1), 1.0);
  EXPECT_EQ(skin_tone_consistency(twin, reg(), "👏🏿", 1), 0.0);
  EXPECT_EQ(skin_tone_consistency(twin, reg(), "👍🏽", 4), 0.25);
  EXPECT_THROW(skin_tone_consistency(twin, reg(), "👍", 1), UnknownTokenError);
  const auto plain = load_embeddings("2 2\n👍 1 0\n👏🏽 1 0\n");
  EXPECT_THROW(skin_tone_consistency(plain, reg(), "👍", 1), NotTonedError);
}

// Brute force over the fixture: share of the k nearest single emojis whose tone set equals the query's.
double brute_consistency(const EmbeddingTable& t, const std::string& q, std::size_t k) {
  auto tones = [](const std::string& s) {
    auto seqs = segment_emoji_run(reg(), utf8::to_codepoints(s));
    return seqs.size() == 1 && !seqs[0].degenerate ? std::optional(seqs[0].skin_tones) : std::nullopt;
  };
  const auto want = *tones(q);
  std::size_t taken = 0, same = 0;
  for (const auto& n : brute_force(t, q)) {
    if (taken == k) break;
    const auto other = tones(n.token);
    if (!other) continue;
    ++taken;
    auto a = want, b = *other;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (a == b) ++same;
  }
  return static_cast<double>(same) / static_cast<double>(k);
}

TEST(ConsistencyTest, FixtureMatchesBruteForce) {
  const auto t = load_embeddings(testing::read_suite("embeddings_fixture.txt"));
  int toned = 0;
  for (const auto& q : t.tokens()) {
    const auto seqs = segment_emoji_run(reg(), utf8::to_codepoints(q));
    if (seqs.size() != 1 || seqs[0].skin_tones.empty()) continue;
    const double got = skin_tone_consistency(t, reg(), q, 5);
    EXPECT_DOUBLE_EQ(got, brute_consistency(t, q, 5)) << q;
    EXPECT_GE(got, 0.8) << q;
    const double count = got * 5;
    EXPECT_DOUBLE_EQ(count, std::round(count));
    ++toned;
  }
  EXPECT_GE(toned, 30);
  EXPECT_DOUBLE_EQ(skin_tone_consistency(t, reg(), "👏🏼", 5), 0.8);
  EXPECT_DOUBLE_EQ(skin_tone_consistency(t, reg(), "👏🏻", 5), 1.0);
}

}  // namespace
}  // namespace emojiseg

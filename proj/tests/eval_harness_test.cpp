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

#include "emojiseg/eval_harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "emojiseg/error.hpp"
#include "support/test_support.hpp"

namespace emojiseg {
namespace {

const Registry& reg() { return Registry::bundled(); }

GoldTokenExample gold(std::string id, std::string text, std::vector<std::string> tokens,
                      EmojiCase c = EmojiCase::kCase1) {
  return {std::move(id), std::move(text), std::move(tokens), c};
}

TEST(RoundTest, HalfAwayFromZero) {
  EXPECT_EQ(round1(100.0 * 4 / 23), 17.4);
  EXPECT_EQ(round1(100.0 * 6 / 23), 26.1);
  EXPECT_EQ(round1(0.05), 0.1);
  EXPECT_EQ(round1(-0.05), -0.1);
  EXPECT_EQ(round1(100.0), 100.0);
}

TEST(ReportTest, AverageIsPassRatio) {
  Report r;
  r.categories.push_back({"a", "A", 6, 6, {}});
  r.categories.push_back({"b", "B", 17, 0, {}});
  r.categories.push_back({"e", "E", 0, 0, {}});
  EXPECT_EQ(r.total(), 23u);
  EXPECT_EQ(r.passed(), 6u);
  EXPECT_EQ(round1(r.average()), 26.1);
  EXPECT_EQ(r.categories[2].pct(), 0.0);
  double weighted = 0;
  for (const auto& c : r.categories) weighted += static_cast<double>(c.count) * c.pct();
  EXPECT_NEAR(weighted / static_cast<double>(r.total()), r.average(), 0.05);
}

TEST(ReportTest, JsonRoundTripAndTable) {
  Report r;
  r.title = "t";
  r.categories.push_back({"Case 1", "SE", 10, 7, {"x1", "x2", "x3"}});
  r.flagged.push_back("note");
  const Report back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.title, "t");
  ASSERT_EQ(back.categories.size(), 1u);
  EXPECT_EQ(back.categories[0].failed_ids, r.categories[0].failed_ids);
  EXPECT_EQ(back.flagged, r.flagged);
  EXPECT_EQ(report_to_json(r)["categories"][0]["pct"], 70.0);
  const std::string table = render_report_table(r);
  EXPECT_NE(table.find("SE"), std::string::npos);
  EXPECT_NE(table.find("70.0"), std::string::npos);
  EXPECT_NE(table.find("Average"), std::string::npos);
}

TEST(CaseNamesTest, Parse) {
  EXPECT_EQ(emoji_case_from_string("Case3"), EmojiCase::kCase3);
  EXPECT_EQ(emoji_case_from_string("Case 6"), EmojiCase::kCase6);
  EXPECT_EQ(emoji_case_from_string("2"), EmojiCase::kCase2);
  EXPECT_FALSE(emoji_case_from_string("Case 7").has_value());
  EXPECT_EQ(case_label(EmojiCase::kCase3), "STE");
  EXPECT_EQ(case_name(EmojiCase::kCase5), "Case 5");
}

TEST(ScoreTokensTest, SevenOfTen) {
  std::vector<GoldTokenExample> golds;
  TokenPredictions preds;
  for (int i = 0; i < 10; ++i) {
    const std::string id = "g" + std::to_string(i);
    golds.push_back(gold(id, "a😊b", {"a", "😊", "b"}));
    preds[id] = i < 7 ? std::vector<std::string>{"a", "😊", "b"} : std::vector<std::string>{"a😊b"};
  }
  const Report r = score_tokens(reg(), golds, preds);
  ASSERT_EQ(r.categories.size(), 6u);
  EXPECT_EQ(r.categories[0].pct(), 70.0);
  EXPECT_EQ(r.categories[0].failed_ids, (std::vector<std::string>{"g7", "g8", "g9"}));
  EXPECT_EQ(r.categories[1].count, 0u);
}

TEST(ScoreTokensTest, NormalizationAppliesToBothSides) {
  const std::vector<GoldTokenExample> golds = {gold("1", "hi! #tag", {"hi", "!", "#tag"})};
  EXPECT_EQ(score_tokens(reg(), golds, {{"1", {"hi", "tag"}}}).passed(), 1u);
  NormalizeOptions strict;
  strict.drop_punct = false;
  EXPECT_EQ(score_tokens(reg(), golds, {{"1", {"hi", "tag"}}}, strict).passed(), 0u);
}

TEST(ScoreTokensTest, ToneSplittingFailsSkinToneCase) {
  std::vector<GoldTokenExample> golds;
  TokenPredictions preds;
  const std::vector<std::string> toned = {"👍🏻", "👍🏼", "👋🏽", "🙏🏾", "👏🏿"};
  for (std::size_t i = 0; i < toned.size(); ++i) {
    const std::string id = "t" + std::to_string(i);
    golds.push_back(gold(id, "ok " + toned[i], {"ok", toned[i]}, EmojiCase::kCase3));
    const std::string base = toned[i].substr(0, 4);
    preds[id] = {"ok", base, toned[i].substr(4)};
  }
  EXPECT_EQ(score_tokens(reg(), golds, preds).categories[2].pct(), 0.0);
}

TEST(ScoreTokensTest, MissingPrediction) {
  const std::vector<GoldTokenExample> golds = {gold("x", "a", {"a"})};
  try {
    score_tokens(reg(), golds, {});
    FAIL();
  } catch (const MissingPredictionError& e) {
    EXPECT_EQ(e.id(), "x");
  }
}

TEST(ScoreTokensTest, MonotoneAndPermutationInvariant) {
  auto golds = load_gold_tokens(testing::read_suite("tokenization_suite.jsonl"));
  TokenPredictions preds;
  std::mt19937 rng(11);
  for (const auto& g : golds) {
    preds[g.id] = rng() % 3 ? g.gold_tokens : std::vector<std::string>{g.text};
  }
  const Report base = score_tokens(reg(), golds, preds);
  std::shuffle(golds.begin(), golds.end(), rng);
  const Report shuffled = score_tokens(reg(), golds, preds);
  for (std::size_t c = 0; c < base.categories.size(); ++c) {
    EXPECT_EQ(base.categories[c].passed, shuffled.categories[c].passed);
  }

  auto extra = golds;
  extra.push_back(gold("extra-pass", "a 😊", {"a", "😊"}, EmojiCase::kCase2));
  preds["extra-pass"] = {"a", "😊"};
  EXPECT_GE(score_tokens(reg(), extra, preds).categories[1].pct(), base.categories[1].pct());
  extra.back().id = "extra-fail";
  preds["extra-fail"] = {"a😊"};
  EXPECT_LE(score_tokens(reg(), extra, preds).categories[1].pct(), base.categories[1].pct());
}

TEST(LoadGoldTokensTest, Errors) {
  EXPECT_THROW(load_gold_tokens(R"({"id":"a","text":"x","case":1,"gold_tokens":["x"]}
{"id":"a","text":"x","case":1,"gold_tokens":["x"]})"),
               ParseError);
  EXPECT_THROW(load_gold_tokens(R"({"id":"a","text":"x","case":1,"gold_tokens":[]})"), ParseError);
  EXPECT_THROW(load_gold_tokens(R"({"id":"a","text":"x","case":"Case 9","gold_tokens":["x"]})"), ParseError);
  try {
    load_gold_tokens("\n{not json", "g.jsonl");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_EQ(load_token_predictions(R"({"id":"a","tokens":[{"text":"x"},"y"]})").at("a"),
            (std::vector<std::string>{"x", "y"}));
}

TEST(MapToCoarseTest, PennAndUpos) {
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "NN"), CoarsePos::kNoun);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "NNPS"), CoarsePos::kNoun);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "JJR"), CoarsePos::kAdjective);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "VBZ"), CoarsePos::kVerb);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "RB"), CoarsePos::kAdverb);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "."), CoarsePos::kPunctuation);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, ","), CoarsePos::kPunctuation);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "SYM"), CoarsePos::kOther);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "WRB"), CoarsePos::kOther);
  EXPECT_EQ(map_to_coarse(Tagset::kPennTreebank, "USR"), CoarsePos::kOther);
  EXPECT_EQ(map_to_coarse(Tagset::kUniversalPos, "PROPN"), CoarsePos::kNoun);
  EXPECT_EQ(map_to_coarse(Tagset::kUniversalPos, "AUX"), CoarsePos::kVerb);
  EXPECT_EQ(map_to_coarse(Tagset::kUniversalPos, "PUNCT"), CoarsePos::kPunctuation);
  EXPECT_EQ(map_to_coarse(Tagset::kUniversalPos, "SYM"), CoarsePos::kOther);
  EXPECT_THROW(map_to_coarse(Tagset::kPennTreebank, "NOUN"), UnknownTagError);
  EXPECT_THROW(map_to_coarse(Tagset::kUniversalPos, "NN"), UnknownTagError);
}

TEST(CoarsePosTest, Names) {
  EXPECT_EQ(coarse_pos_from_string("adj"), CoarsePos::kAdjective);
  EXPECT_EQ(coarse_pos_from_string("Punctuation"), CoarsePos::kPunctuation);
  EXPECT_EQ(tagset_from_string(to_string(Tagset::kUniversalPos)), Tagset::kUniversalPos);
}

PosPredictions all_tagged(const std::vector<GoldPosExample>& golds, auto tag_for) {
  PosPredictions preds;
  for (const auto& g : golds) {
    auto& tagged = preds.tagged[g.id];
    for (const auto& t : g.targets) tagged.push_back({t.text, std::string(tag_for(t.gold))});
  }
  return preds;
}

std::string_view penn_of(CoarsePos p) {
  switch (p) {
    case CoarsePos::kNoun: return "NN";
    case CoarsePos::kAdjective: return "JJ";
    case CoarsePos::kVerb: return "VB";
    case CoarsePos::kAdverb: return "RB";
    case CoarsePos::kPunctuation: return ".";
    case CoarsePos::kOther: return "SYM";
  }
  return "SYM";
}

TEST(ScorePosTest, SuiteBaselines) {
  const auto golds = load_gold_pos(testing::read_suite("pos_suite.jsonl"));
  ASSERT_EQ(golds.size(), 23u);

  const Report noun = score_pos(reg(), golds, all_tagged(golds, [](CoarsePos) { return "NN"; }));
  ASSERT_EQ(noun.categories.size(), 5u);
  EXPECT_EQ(noun.categories[0].pct(), 100.0);
  for (std::size_t c = 1; c < 5; ++c) EXPECT_EQ(noun.categories[c].pct(), 0.0);
  EXPECT_EQ(round1(noun.average()), 26.1);

  const Report perfect = score_pos(reg(), golds, all_tagged(golds, penn_of));
  EXPECT_EQ(perfect.average(), 100.0);

  const Report verbs = score_pos(reg(), golds, all_tagged(golds, [](CoarsePos p) {
    return p == CoarsePos::kVerb ? "VB" : "SYM";
  }));
  EXPECT_EQ(verbs.categories[2].pct(), 100.0);
  EXPECT_EQ(round1(verbs.average()), 17.4);
}

TEST(ScorePosTest, MergedTokensAreSearchedAndMissingTargetsFlagged) {
  const std::vector<GoldPosExample> golds = {
      {"a", "x ? 🌟 🤖", {{"🌟", 0, CoarsePos::kNoun}, {"🤖", 0, CoarsePos::kNoun}}},
      {"b", "y 🐶", {{"🐶", 0, CoarsePos::kNoun}}},
  };
  PosPredictions preds;
  preds.tagged["a"] = {{"x", "NN"}, {"? 🌟 🤖", "NNP"}};
  preds.tagged["b"] = {{"y", "NN"}};
  const Report r = score_pos(reg(), golds, preds);
  EXPECT_EQ(r.categories[0].passed, 2u);
  EXPECT_EQ(r.categories[0].count, 3u);
  ASSERT_EQ(r.flagged.size(), 1u);
  EXPECT_NE(r.flagged[0].find("b"), std::string::npos);
  EXPECT_THROW(score_pos(reg(), golds, PosPredictions{}), MissingPredictionError);
}

TEST(ScorePosTest, OccurrenceSelectsRepeatedTarget) {
  const std::vector<GoldPosExample> golds = {{"a", "🔥 hot 🔥", {{"🔥", 1, CoarsePos::kAdjective}}}};
  PosPredictions preds;
  preds.tagged["a"] = {{"🔥", "NN"}, {"hot", "JJ"}, {"🔥", "JJ"}};
  EXPECT_EQ(score_pos(reg(), golds, preds).passed(), 1u);
  preds.tagged["a"][2].tag = "NN";
  preds.tagged["a"][0].tag = "JJ";
  EXPECT_EQ(score_pos(reg(), golds, preds).passed(), 0u);
}

TEST(LoadPosTest, HeaderAndPairs) {
  const auto preds = load_pos_predictions(R"({"tagset":"UniversalPOS"}
{"id":"a","tagged":[["x","NOUN"],{"text":"y","tag":"VERB"}]})");
  EXPECT_EQ(preds.tagset, Tagset::kUniversalPos);
  ASSERT_EQ(preds.tagged.at("a").size(), 2u);
  EXPECT_EQ(preds.tagged.at("a")[1].tag, "VERB");
  EXPECT_THROW(load_pos_predictions(R"({"id":"a","tagged":[]})"), ParseError);
  EXPECT_THROW(load_gold_pos(R"({"id":"a","text":"x","targets":[{"text":"x","occurrence":0,"gold":"Other"}]})"),
               ParseError);
}

TEST(ScoreSentimentTest, Conditions) {
  std::vector<SentimentExample> ex;
  SentimentPredictions neutral, perfect, neg3;
  for (int i = 0; i < 5; ++i) {
    const std::string n = std::to_string(i);
    ex.push_back({"ns" + n, "t", SentimentCondition::kNeutralSentence, Polarity::kNeutral});
    ex.push_back({"pos" + n, "t 😍", SentimentCondition::kPositiveEmoji, Polarity::kPositive});
    ex.push_back({"neg" + n, "t 😞", SentimentCondition::kNegativeEmoji, Polarity::kNegative});
  }
  for (const auto& e : ex) {
    neutral[e.id] = Polarity::kNeutral;
    perfect[e.id] = e.gold;
    neg3[e.id] = e.condition == SentimentCondition::kNegativeEmoji && e.id < "neg3" ? e.gold : Polarity::kNeutral;
  }
  const Report n = score_sentiment(ex, neutral);
  ASSERT_EQ(n.categories.size(), 3u);
  EXPECT_EQ(n.categories[0].pct(), 100.0);
  EXPECT_EQ(n.categories[1].pct(), 0.0);
  EXPECT_EQ(n.categories[2].pct(), 0.0);
  EXPECT_EQ(n.categories[1].label, "+ve");
  EXPECT_EQ(score_sentiment(ex, perfect).average(), 100.0);
  EXPECT_EQ(score_sentiment(ex, neg3).categories[2].pct(), 60.0);
  EXPECT_THROW(score_sentiment(ex, {}), MissingPredictionError);
}

TEST(ConditionTest, Names) {
  EXPECT_EQ(condition_from_string("+ve"), SentimentCondition::kPositiveEmoji);
  EXPECT_EQ(condition_from_string("NegEmoji"), SentimentCondition::kNegativeEmoji);
  EXPECT_EQ(condition_from_string("NS"), SentimentCondition::kNeutralSentence);
  EXPECT_FALSE(condition_from_string("x").has_value());
}

Report token_report(std::vector<std::size_t> passed_of_10) {
  Report r;
  for (std::size_t c = 0; c < passed_of_10.size(); ++c) {
    const auto ec = static_cast<EmojiCase>(c + 1);
    r.categories.push_back({case_name(ec), std::string(case_label(ec)), 100, passed_of_10[c], {}});
  }
  return r;
}

TEST(SupportMatrixTest, Thresholds) {
  const std::map<std::string, Report> reports = {
      {"a", token_report({100, 70, 92, 49, 50, 0})},
      {"z", token_report({0, 0, 0, 0, 0, 0})},
  };
  const SupportMatrix m = render_support_matrix(reports);
  EXPECT_EQ(m.columns, (std::vector<std::string>{"SE", "GE", "STE", "BMP", "SMP", "ZWJ"}));
  ASSERT_EQ(m.rows.size(), 2u);
  EXPECT_EQ(m.rows[0].second, (std::vector<bool>{true, true, true, false, true, false}));
  EXPECT_EQ(m.rows[1].second, std::vector<bool>(6, false));
  EXPECT_EQ(render_support_matrix(reports, 95).rows[0].second,
            (std::vector<bool>{true, false, false, false, false, false}));

  const std::string table = render_matrix_table(m);
  EXPECT_NE(table.find("✓"), std::string::npos);
  EXPECT_NE(table.find("✗"), std::string::npos);
  const auto json = matrix_to_json(m);
  EXPECT_EQ(json["threshold"], 50.0);
  EXPECT_EQ(json["rows"][0]["tool"], "a");
}

TEST(SupportMatrixTest, MismatchedCategories) {
  Report other;
  other.categories.push_back({"Noun", "Noun", 1, 1, {}});
  EXPECT_THROW(render_support_matrix({{"a", token_report({1, 1, 1, 1, 1, 1})}, {"b", other}}), Error);
}

}  // namespace
}  // namespace emojiseg

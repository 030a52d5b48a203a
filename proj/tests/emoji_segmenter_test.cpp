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

#include "emojiseg/emoji_segmenter.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emojiseg/error.hpp"
#include "support/test_support.hpp"

namespace emojiseg {
namespace {

using CpVec = std::vector<char32_t>;

constexpr char32_t kThumbsUp = 0x1F44D;
constexpr char32_t kLight = 0x1F3FB;
constexpr char32_t kMediumLight = 0x1F3FC;
constexpr char32_t kDark = 0x1F3FF;
constexpr char32_t kZwj = 0x200D;
constexpr char32_t kMan = 0x1F468;
constexpr char32_t kWoman = 0x1F469;
constexpr char32_t kGirl = 0x1F467;
constexpr char32_t kBoy = 0x1F466;
constexpr char32_t kGrinning = 0x1F604;
constexpr char32_t kTearsOfJoy = 0x1F602;

class SegmenterTest : public ::testing::Test {
 protected:
  std::vector<EmojiSequence> seg(const CpVec& cps) const { return segment_emoji_run(reg_, cps); }
  const Registry& reg_ = Registry::bundled();
};

TEST_F(SegmenterTest, ModifierSequenceStaysWhole) {
  const auto out = seg({kThumbsUp, kLight});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kModifierSequence);
  EXPECT_EQ(out[0].skin_tones, CpVec({kLight}));
  EXPECT_EQ(out[0].max_plane.index, 1);
  EXPECT_FALSE(out[0].degenerate);
}

TEST_F(SegmenterTest, FamilyIsOneZwjSequence) {
  const auto out = seg({kMan, kZwj, kWoman, kZwj, kGirl, kZwj, kBoy});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kZwjSequence);
  EXPECT_EQ(out[0].codepoints.size(), 7u);
}

TEST_F(SegmenterTest, ClusterSplitsIntoBasics) {
  const auto out = seg({kGrinning, kGrinning, kGrinning, kGrinning});
  ASSERT_EQ(out.size(), 4u);
  for (const auto& s : out) EXPECT_EQ(s.kind, SequenceKind::kBasic);
}

TEST_F(SegmenterTest, LoneToneIsStandaloneModifier) {
  const auto out = seg({kMediumLight});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kStandaloneModifier);
  EXPECT_EQ(out[0].skin_tones, CpVec({kMediumLight}));
}

TEST_F(SegmenterTest, ToneAfterNonCapableBaseIsNotAbsorbed) {
  const auto out = seg({kTearsOfJoy, kLight});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].kind, SequenceKind::kBasic);
  EXPECT_EQ(out[1].kind, SequenceKind::kStandaloneModifier);
}

TEST_F(SegmenterTest, ToneCapableBaseThroughVariationSelector) {
  const auto out = seg({0x270C, 0xFE0F, kDark});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kModifierSequence);
  EXPECT_EQ(out[0].max_plane.index, 1);
}

TEST_F(SegmenterTest, FlagsPairLeftmost) {
  const auto out = seg({0x1F1E8, 0x1F1E6, 0x1F1FA, 0x1F1F8, 0x1F1E8});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].kind, SequenceKind::kFlagSequence);
  EXPECT_EQ(out[1].kind, SequenceKind::kFlagSequence);
  EXPECT_EQ(out[2].kind, SequenceKind::kBasic);
  EXPECT_FALSE(out[2].degenerate);
}

TEST_F(SegmenterTest, KeycapAndTagSequences) {
  auto out = seg({U'1', 0xFE0F, 0x20E3, U'#', 0x20E3});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].kind, SequenceKind::kKeycapSequence);
  EXPECT_EQ(out[1].kind, SequenceKind::kKeycapSequence);
  EXPECT_EQ(out[0].max_plane.index, 0);

  out = seg({0x1F3F4, 0xE0067, 0xE0062, 0xE0073, 0xE0063, 0xE0074, 0xE007F});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kTagSequence);
  EXPECT_EQ(out[0].max_plane.index, 14);
}

TEST_F(SegmenterTest, ZwjWithTonedMembersKeepsAllTones) {
  const auto out = seg({kWoman, kLight, kZwj, 0x1F91D, kZwj, kMan, kDark});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].kind, SequenceKind::kZwjSequence);
  EXPECT_EQ(out[0].skin_tones, CpVec({kLight, kDark}));
}

TEST_F(SegmenterTest, DanglingJoinersAreDegenerate) {
  const auto out = seg({kZwj, kMan, kZwj, kZwj, kWoman, kZwj});
  ASSERT_EQ(out.size(), 6u);
  EXPECT_TRUE(out[0].degenerate);
  EXPECT_EQ(out[1].codepoints, CpVec({kMan}));
  EXPECT_TRUE(out[2].degenerate);
  EXPECT_TRUE(out[3].degenerate);
  EXPECT_TRUE(out[5].degenerate);
}

TEST_F(SegmenterTest, KeycapBaseDoesNotJoin) {
  const auto out = seg({U'1', kZwj, kMan});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].kind, SequenceKind::kBasic);
  EXPECT_TRUE(out[1].degenerate);
}

TEST_F(SegmenterTest, EmptyRun) { EXPECT_TRUE(seg({}).empty()); }

TEST_F(SegmenterTest, SequenceKindAccessor) {
  EXPECT_EQ(sequence_kind(seg({kThumbsUp, kDark})[0]), SequenceKind::kModifierSequence);
  EXPECT_EQ(sequence_kind(seg({0x1F1E8, 0x1F1E6})[0]), SequenceKind::kFlagSequence);
  EXPECT_EQ(sequence_kind(seg({kGrinning})[0]), SequenceKind::kBasic);
}

TEST_F(SegmenterTest, ApplySkinTone) {
  const EmojiSequence base = seg({kThumbsUp})[0];
  const EmojiSequence toned = apply_skin_tone(reg_, base, kDark);
  EXPECT_EQ(toned.codepoints, CpVec({kThumbsUp, kDark}));
  EXPECT_EQ(toned.kind, SequenceKind::kModifierSequence);
  const auto reparsed = seg(toned.codepoints);
  ASSERT_EQ(reparsed.size(), 1u);
  EXPECT_EQ(reparsed[0], toned);
  EXPECT_EQ(base.codepoints, CpVec({kThumbsUp}));

  EXPECT_EQ(apply_skin_tone(reg_, seg({0x270C, 0xFE0F})[0], kLight).codepoints, CpVec({0x270C, kLight}));
}

TEST_F(SegmenterTest, ApplySkinToneErrors) {
  auto reason = [&](const EmojiSequence& s, char32_t tone) {
    try {
      apply_skin_tone(reg_, s, tone);
    } catch (const SkinToneError& e) {
      return e.reason();
    }
    ADD_FAILURE() << "no error";
    return SkinToneError::Reason::kInvalidTone;
  };
  EXPECT_EQ(reason(seg({kTearsOfJoy})[0], kLight), SkinToneError::Reason::kNotToneCapable);
  EXPECT_EQ(reason(seg({kThumbsUp})[0], U'a'), SkinToneError::Reason::kInvalidTone);
  EXPECT_EQ(reason(seg({kThumbsUp, kLight})[0], kDark), SkinToneError::Reason::kNotBasic);
}

TEST_F(SegmenterTest, StripSkinTones) {
  const auto stripped = strip_skin_tones(reg_, seg({kThumbsUp, kLight})[0]);
  EXPECT_EQ(stripped.codepoints, CpVec({kThumbsUp}));
  EXPECT_EQ(stripped.kind, SequenceKind::kBasic);
  EXPECT_TRUE(stripped.skin_tones.empty());

  const EmojiSequence plain = seg({kGrinning})[0];
  EXPECT_EQ(strip_skin_tones(reg_, plain), plain);

  const auto zwj = seg({kWoman, kLight, kZwj, 0x1F91D, kZwj, kMan, kDark})[0];
  const auto zwj_stripped = strip_skin_tones(reg_, zwj);
  EXPECT_EQ(zwj_stripped.kind, SequenceKind::kZwjSequence);
  EXPECT_EQ(zwj_stripped.codepoints, CpVec({kWoman, kZwj, 0x1F91D, kZwj, kMan}));
  EXPECT_EQ(seg(zwj_stripped.codepoints).size(), 1u);

  const auto swatch = seg({kDark})[0];
  EXPECT_EQ(strip_skin_tones(reg_, swatch), swatch);
}

TEST_F(SegmenterTest, ApplyThenStripIsIdentity) {
  for (char32_t base : {kThumbsUp, kWoman, char32_t{0x1F44F}}) {
    const EmojiSequence b = seg({base})[0];
    for (char32_t tone = 0x1F3FB; tone <= 0x1F3FF; ++tone) {
      EXPECT_EQ(strip_skin_tones(reg_, apply_skin_tone(reg_, b, tone)), b);
    }
  }
}

TEST_F(SegmenterTest, LexiconKeyDropsTonesAndSelectors) {
  EXPECT_EQ(lexicon_key(CpVec{0x2764, 0xFE0F}), CpVec({0x2764}));
  EXPECT_EQ(lexicon_key(CpVec{kThumbsUp, kDark}), CpVec({kThumbsUp}));
  EXPECT_EQ(lexicon_key(CpVec{kDark}), CpVec({kDark}));
}

void expect_well_formed(const EmojiSequence& s, const Registry& reg) {
  using Cls = CodePointClass;
  ASSERT_FALSE(s.codepoints.empty());
  const bool has_zwj = std::find(s.codepoints.begin(), s.codepoints.end(), kZwj) != s.codepoints.end();
  if (!s.degenerate) {
    EXPECT_EQ(s.kind == SequenceKind::kZwjSequence, has_zwj);
    EXPECT_NE(s.codepoints.front(), kZwj);
    EXPECT_NE(s.codepoints.back(), kZwj);
  } else {
    EXPECT_EQ(s.codepoints.size(), 1u);
    EXPECT_EQ(s.kind, SequenceKind::kBasic);
  }
  switch (s.kind) {
    case SequenceKind::kModifierSequence: {
      ASSERT_EQ(s.skin_tones.size(), 1u);
      EXPECT_EQ(reg.classify(s.codepoints.front()), Cls::kToneCapableBase);
      EXPECT_TRUE(s.codepoints.size() == 2 ||
                  (s.codepoints.size() == 3 && is_variation_selector(reg.classify(s.codepoints[1]))));
      EXPECT_EQ(reg.classify(s.codepoints.back()), Cls::kSkinToneModifier);
      break;
    }
    case SequenceKind::kStandaloneModifier:
      EXPECT_EQ(s.codepoints.size(), 1u);
      EXPECT_EQ(reg.classify(s.codepoints[0]), Cls::kSkinToneModifier);
      break;
    case SequenceKind::kFlagSequence:
      ASSERT_EQ(s.codepoints.size(), 2u);
      EXPECT_EQ(reg.classify(s.codepoints[0]), Cls::kRegionalIndicator);
      EXPECT_EQ(reg.classify(s.codepoints[1]), Cls::kRegionalIndicator);
      break;
    case SequenceKind::kBasic:
      EXPECT_TRUE(s.skin_tones.empty());
      break;
    default:
      break;
  }
  Plane top;
  for (char32_t cp : s.codepoints) top = std::max(top, plane_of(cp));
  EXPECT_EQ(s.max_plane, top);
}

TEST_F(SegmenterTest, MatchesReferenceParserOnRandomRuns) {
  const testing::ReferenceParser reference(reg_);
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const CpVec run = testing::random_emoji_run(rng);
    const auto got = seg(run);
    const auto want = reference.parse(run);
    ASSERT_EQ(got.size(), want.size()) << utf8::format_codepoints(run);
    CpVec concat;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].codepoints, want[i].codepoints) << utf8::format_codepoints(run);
      EXPECT_EQ(got[i].kind, want[i].kind) << utf8::format_codepoints(run);
      EXPECT_EQ(got[i].degenerate, want[i].degenerate) << utf8::format_codepoints(run);
      expect_well_formed(got[i], reg_);
      if (got[i].codepoints == CpVec{kZwj}) EXPECT_TRUE(got[i].degenerate);
      concat.insert(concat.end(), got[i].codepoints.begin(), got[i].codepoints.end());
    }
    EXPECT_EQ(concat, run);
  }
}

// No production matches a longer span than the one taken at any sequence start.
TEST_F(SegmenterTest, NoLongerMatchAtAnyBoundary) {
  const testing::ReferenceParser reference(reg_);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const CpVec run = testing::random_emoji_run(rng, 8);
    std::size_t start = 0;
    for (const auto& s : seg(run)) {
      for (std::size_t len = s.codepoints.size() + 1; start + len <= run.size(); ++len) {
        const CpVec longer(run.begin() + static_cast<std::ptrdiff_t>(start),
                           run.begin() + static_cast<std::ptrdiff_t>(start + len));
        const auto parsed = reference.parse(longer);
        EXPECT_GT(parsed.size(), 1u) << utf8::format_codepoints(longer);
      }
      start += s.codepoints.size();
    }
  }
}

// Every fully-qualified sequence of the Unicode emoji test file is one
// non-degenerate sequence.
TEST_F(SegmenterTest, RgiSequencesAreSingleSequences) {
  std::istringstream file(testing::read_text(testing::test_data_path("emoji-test.txt")));
  std::string line;
  int checked = 0;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos || line.find("fully-qualified", semi) == std::string::npos) continue;
    CpVec cps;
    std::istringstream hex(line.substr(0, semi));
    std::string field;
    while (hex >> field) cps.push_back(static_cast<char32_t>(std::stoul(field, nullptr, 16)));
    const auto out = seg(cps);
    ASSERT_EQ(out.size(), 1u) << line;
    EXPECT_FALSE(out[0].degenerate) << line;
    ++checked;
  }
  EXPECT_GT(checked, 3000);
}

}  // namespace
}  // namespace emojiseg

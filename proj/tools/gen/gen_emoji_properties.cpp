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

// Regenerates data/emoji-properties.txt from ICU's emoji properties plus the
// sequences listed in a Unicode emoji-test.txt file.
//
//   gen_emoji_properties path/to/emoji-test.txt > data/emoji-properties.txt

#include <unicode/uchar.h>
#include <unicode/uversion.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr char32_t kMaxCodePoint = 0x10FFFF;

std::string hex(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_emoji_properties EMOJI_TEST_TXT\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }

  std::vector<std::string> cls(kMaxCodePoint + 1);
  std::string test_version = "unknown";

  // Everything ICU knows as emoji or extended pictographic is a base.
  for (char32_t cp = 0; cp <= kMaxCodePoint; ++cp) {
    if (u_hasBinaryProperty(cp, UCHAR_EMOJI) ||
        u_hasBinaryProperty(cp, UCHAR_EXTENDED_PICTOGRAPHIC)) {
      cls[cp] = "EMOJI_BASE";
    }
    if (u_hasBinaryProperty(cp, UCHAR_EMOJI_MODIFIER_BASE)) {
      cls[cp] = "TONE_CAPABLE_BASE";
    }
  }

  // Newer emoji-test data adds bases and modifier bases ICU may predate.
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# Version:", 0) == 0) {
      test_version = line.substr(11);
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) continue;
    std::istringstream fields(line.substr(0, semi));
    std::vector<char32_t> cps;
    std::string tok;
    while (fields >> tok) cps.push_back(static_cast<char32_t>(std::stoul(tok, nullptr, 16)));
    if (cps.empty()) continue;
    if (cls[cps[0]].empty()) cls[cps[0]] = "EMOJI_BASE";
    for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
      if (cps[i + 1] >= 0x1F3FB && cps[i + 1] <= 0x1F3FF) {
        cls[cps[i]] = "TONE_CAPABLE_BASE";
      }
    }
  }

  // Structural classes override the base classification.
  for (char32_t cp : {U'#', U'*'}) cls[cp] = "KEYCAP_BASE";
  for (char32_t cp = U'0'; cp <= U'9'; ++cp) cls[cp] = "KEYCAP_BASE";
  for (char32_t cp = 0x1F3FB; cp <= 0x1F3FF; ++cp) cls[cp] = "SKIN_TONE_MODIFIER";
  for (char32_t cp = 0x1F1E6; cp <= 0x1F1FF; ++cp) cls[cp] = "REGIONAL_INDICATOR";
  for (char32_t cp = 0xE0020; cp <= 0xE007E; ++cp) cls[cp] = "TAG_CHAR";
  cls[0xE007F] = "TAG_TERMINATOR";
  cls[0x200D] = "ZERO_WIDTH_JOINER";
  cls[0xFE0F] = "VARIATION_SELECTOR_EMOJI";
  cls[0xFE0E] = "VARIATION_SELECTOR_TEXT";
  cls[0x20E3] = "COMBINING_KEYCAP";

  UVersionInfo uv;
  u_getUnicodeVersion(uv);
  char uvs[U_MAX_VERSION_STRING_LENGTH];
  u_versionToString(uv, uvs);

  std::cout << "# Emoji code point classes.\n"
            << "# Version: emoji-" << test_version << "\n"
            << "# Generated by tools/gen/gen_emoji_properties from ICU Unicode " << uvs
            << " emoji properties and emoji-test.txt " << test_version << ".\n"
            << "# Format: FIRST..LAST<TAB>CLASS or CP<TAB>CLASS; unlisted code points are NON_EMOJI.\n";

  char32_t cp = 0;
  while (cp <= kMaxCodePoint) {
    if (cls[cp].empty()) {
      ++cp;
      continue;
    }
    char32_t end = cp;
    while (end + 1 <= kMaxCodePoint && cls[end + 1] == cls[cp]) ++end;
    if (end == cp) {
      std::cout << hex(cp) << '\t' << cls[cp] << '\n';
    } else {
      std::cout << hex(cp) << ".." << hex(end) << '\t' << cls[cp] << '\n';
    }
    cp = end + 1;
  }
  return 0;
}

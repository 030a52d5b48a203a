#!/usr/bin/env python3
# Copyright 2026 The emojiseg Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds data/emoji-sentiment.tsv from Emoji_Sentiment_Data_v1.0.csv.

Fractions use the Laplace-smoothed estimate of the Emoji Sentiment Ranking,
p_c = (N_c + 1) / (N + 3). The neutral fraction is written as the remainder
so every row sums to exactly 1 at the printed precision.

    build_sentiment_lexicon.py Emoji_Sentiment_Data_v1.0.csv > data/emoji-sentiment.tsv
"""

import csv
import sys

SUBSET = (
    "😂 ❤ ♥ 😍 😊 👍 👏 🙌 😄 😁 😘 💕 ✨ 🎉 😎 💯 🔥 ☺ ☀ ✌ ⭐ 🌟 🐶 🐱 ❓ ❗ 📈 "
    "😞 😠 😒 😡 💔 😩 😭 😢 😔 😫 😤 😑 😐 🙏 💪 👋 👌 👀 🎂 🍕 🚗 ⚽ ☕ ❄ ✅ "
    "🌹 🙈 😉 😀 😃 😋 👎 💀 💙 🌈 👨 👩 👧 👦"
).split()

# Emojis newer than the ranking's collection period. Hand-assigned, not
# measured; kept so the bundled suites have full lexicon coverage.
SUPPLEMENTARY = [
    ("🦄", 0.05, 0.60),
    ("🤩", 0.04, 0.70),
    ("🤪", 0.15, 0.45),
    ("🙄", 0.55, 0.15),
    ("🗨", 0.45, 0.15),
    ("🤔", 0.20, 0.20),
    ("🤖", 0.10, 0.20),
]


def row(emoji, neg, pos):
    neut = round(1.0 - round(neg, 6) - round(pos, 6), 6)
    return f"{emoji}\t{neg:.6f}\t{neut:.6f}\t{pos:.6f}"


def main():
    with open(sys.argv[1], newline="", encoding="utf-8") as f:
        rows = {r[0]: r for r in list(csv.reader(f))[1:]}
    print("# Emoji sentiment lexicon: emoji<TAB>p_neg<TAB>p_neut<TAB>p_pos")
    print("# Source: Emoji Sentiment Ranking v1.0 (Kralj Novak et al., CC BY-SA 4.0),")
    print("# Laplace-smoothed fractions (N_c + 1) / (N + 3).")
    for e in SUBSET:
        r = rows[e]
        n, u, p = int(r[4]), int(r[5]), int(r[6])
        total = n + u + p + 3
        print(row(e, (n + 1) / total, (p + 1) / total))
    print("# Supplementary entries (not in the ranking; hand-assigned).")
    for e, neg, pos in SUPPLEMENTARY:
        print(row(e, neg, pos))


if __name__ == "__main__":
    main()

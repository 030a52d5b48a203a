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

"""Writes the bundled evaluation suites next to this script.

Gold tokenizations are written by hand in a small boundary notation: spaces
are real spaces and token boundaries, '|' is a token boundary with no space in
the text. "Emojis|😊|are" is the text "Emojis😊are" with the gold tokens
["Emojis", "😊", "are"].

    python3 data/suites/build_suites.py
"""

import json
import math
import pathlib

HERE = pathlib.Path(__file__).resolve().parent

ZWJ = "‍"
VS16 = "️"
TONES = ["\U0001F3FB", "\U0001F3FC", "\U0001F3FD", "\U0001F3FE", "\U0001F3FF"]
LIGHT, MEDIUM_LIGHT, MEDIUM, MEDIUM_DARK, DARK = TONES


def zwj(*parts):
    return ZWJ.join(parts)


FAMILY_MWGB = zwj("\U0001F468", "\U0001F469", "\U0001F467", "\U0001F466")
WOMAN_TECHNOLOGIST = zwj("\U0001F469", "\U0001F4BB")
RAINBOW_FLAG = zwj("\U0001F3F3" + VS16, "\U0001F308")
ASTRONAUT_MEDIUM = zwj("\U0001F9D1" + MEDIUM, "\U0001F680")
POLAR_BEAR = zwj("\U0001F43B", "❄" + VS16)
COUPLE_HEART = zwj("\U0001F469", "❤" + VS16, "\U0001F468")
WOMAN_RUNNING = zwj("\U0001F3C3", "♀" + VS16)
HEART_ON_FIRE = zwj("❤" + VS16, "\U0001F525")
FACE_IN_CLOUDS = zwj("\U0001F636", "\U0001F32B" + VS16)
EYE_BUBBLE = zwj("\U0001F441" + VS16, "\U0001F5E8" + VS16)
SHRUG_WOMAN = "\U0001F937{T}" + ZWJ + "♀" + VS16
SCOTLAND = "\U0001F3F4\U000E0067\U000E0062\U000E0073\U000E0063\U000E0074\U000E007F"
KEYCAP_ONE = "1" + VS16 + "⃣"

# --- tokenization -----------------------------------------------------------

CASE1 = [
    "Emojis 😊 are a new way of expressing emotions|! #emoji",
    "Emojis|😊|are a new way of expressing emotions|! #emoji",
    "Good morning 😊",
    "😂 that was hilarious",
    "Can't wait for the weekend|🎉",
    "Just finished my run 🏅 #fitness",
    "@anna_b happy birthday|🎂|!",
    "Dinner is ready 🍝 come down",
    "Thinking about it|🤔|...",
    "Read more at https://t.co/AbC123 📚",
]

CASE2 = [
    "Emojis 😄 are a new way for expressing emotions 😄|! #emoji",
    "Another example is having multiple emojis 😄 😄 😄 😄 together in a tweet|.",
    "This gets a little complicated when having multiple emojis 😄|😄|😄|😄 in a tweet without"
    " having any spaces in between emojis|.",
    "Yahoooooo|! 🤩|🤩|🤩|🤩",
    "When armed with this everything gets a clean 🤪|🤪|🤪|🤪 including the neighbours car"
    " 🚗|👍|🤪 ooops #foambath #jetwashing|-|fun #happydays #everythingclean",
    "🌞 Good morning 🌻",
    "Best day ever|🎂|🎈|🎁",
    "We won 🏆 🥇 #champions",
    "Miss you 😢|😢 come back soon 💔",
    "Movie night 🍿|🎬 with @jo_99",
]

# Case 3: three worked examples, then templates cycled over the five tones.
CASE3_FIXED = [
    ("I'm the Face with Tears of Joy emoji 😂|. How do you like 👍" + MEDIUM + " me|?"),
    ("We are all same " + " ".join("🧒" + t for t in TONES) + " but different in skin colors|!"),
    ("Checking a long sequence of emojis "
     + "|".join(["👍" + t for t in TONES] + ["👏" + MEDIUM, "👏" + DARK])
     + " and skin tones " + " ".join(TONES) + "|."),
]

CASE3_TEMPLATES = [
    "Great job team 👏{T}",
    "👋{T} Good morning everyone",
    "Thanks|🙏{T}|see you tomorrow",
    "Well done|👍{T}|👏{T}",
    "So proud of you|💪{T} #proud",
    "🙌{T} 🙌{T} 🙌{T}",
    "Let's go|!!!|👊{T}",
    "Happy birthday @sam_k 🎉 👶{T}",
    "New video out now https://t.co/x1y2z3 👌{T}",
    "We made it|🙌{T}|😂",
    "Love this song|💃{T}|❤️",
    "Wave at the camera 👋{T}|.",
    "Coffee time ☕|👍{T}",
    "Peace and love ✌{T}",
    "I'm done " + SHRUG_WOMAN,
    "Fingers crossed 🤞{T} for tomorrow's exam",
]

CASE4 = [
    "Morning ☕ and a good book",
    "Sunny day ☀️ at the beach",
    "Game night|⚽|tonight|!",
    "Stars ✨|✨ everywhere",
    "I ❤️ this city",
    "Check ✅ done with homework",
    "Snow day ⛄ stay warm",
    "Rain again ☔",
    "Room " + KEYCAP_ONE + " is ready",
    "Copyright ©️ 2020 all rights reserved",
]

CASE5 = [
    "Party time 🎉|🎉",
    "Pizza|🍕|for dinner",
    "To the moon 🚀",
    "Let's go for it 🦄",
    "Beep boop 🤖 I am a bot",
    "Happy Canada Day 🇨🇦|🇨🇦",
    "Scotland " + SCOTLAND + " forever",
    "Say cheese|🧀|!",
    "Cool 😎 #summer",
    "This is fire 🔥|🔥|🔥 @dj_mike",
]

CASE6 = [
    "Family time " + FAMILY_MWGB,
    "Coding all night " + WOMAN_TECHNOLOGIST,
    "Happy pride " + RAINBOW_FLAG,
    "Astronaut dreams " + ASTRONAUT_MEDIUM + " 🚀",
    "Polar bear|" + POLAR_BEAR + "|in the zoo",
    "Love you " + COUPLE_HEART,
    "Morning run " + WOMAN_RUNNING + "|💨",
    "Heart on " + HEART_ON_FIRE,
    "Lost in the fog " + FACE_IN_CLOUDS,
    "I see you " + EYE_BUBBLE,
]


def expand(dsl):
    text = dsl.replace("|", "")
    tokens = [t for chunk in dsl.split(" ") for t in chunk.split("|") if t]
    return text, tokens


def case3_examples():
    out = list(CASE3_FIXED)
    for i in range(47):
        template = CASE3_TEMPLATES[i % len(CASE3_TEMPLATES)]
        out.append(template.replace("{T}", TONES[i % len(TONES)]))
    return out


def tokenization_suite():
    rows = []
    cases = [CASE1, CASE2, case3_examples(), CASE4, CASE5, CASE6]
    for case_no, examples in enumerate(cases, start=1):
        for i, dsl in enumerate(examples, start=1):
            text, tokens = expand(dsl)
            rows.append({"id": f"c{case_no}-{i:02d}", "text": text, "case": f"Case{case_no}",
                         "gold_tokens": tokens})
    return rows


# --- part of speech ---------------------------------------------------------

PICTURE = "I MADE A PICTURE ‼️ What do you think ❓ 🌟 🤖"

POS = [
    ("Noun", "She kept her 🐶 dog but had to sell her 🐱....", "🐶"),
    ("Noun", "MODIFIED: She kept her 🐶 but had to sell her 🐱....", "🐶"),
    ("Noun", "Just bought a new 🚗 today", "🚗"),
    ("Noun", "Can't find my 🔑 anywhere", "🔑"),
    ("Noun", "Drinking ☕ with friends", "☕"),
    ("Noun", "The 🍕 was amazing", "🍕"),
    ("Adjective", "Yes, she is 😍 and I like it", "😍"),
    ("Adjective", "Feeling 💯 today", "💯"),
    ("Adjective", "That movie was 🔥", "🔥"),
    ("Adjective", "You look 😎 in that jacket", "😎"),
    ("Adjective", "The weather is so ☀️ today", "☀️"),
    ("Verb", "I ❤️ you", "❤️"),
    ("Verb", "Can't wait to 🍻 with you guys", "🍻"),
    ("Verb", "We 🙏 for rain", "🙏"),
    ("Verb", "Let's 💃 all night", "💃"),
    ("Adverb", "My Credit Score Went 📈 7 Points 🙌", "📈"),
    ("Adverb", "Prices went 📉 again this week", "📉"),
    ("Adverb", "I ran 💨 to catch the bus", "💨"),
    ("Adverb", "I'll be there 🔜", "🔜"),
    ("Punctuation", PICTURE, "‼️"),
    ("Punctuation", PICTURE, "❓"),
    ("Punctuation", "Are you coming tonight ❔", "❔"),
    ("Punctuation", "Stop right there ❗", "❗"),
]

# Token streams as a whitespace or word-level tokenizer might produce them.
MERGED = {
    "p01": "She|kept|her|🐶|dog|but|had|to|sell|her|🐱....",
    "p07": "Yes,|she|is 😍 and|I|like|it",
    "p12": "I|❤️you",
    "p14": "We🙏|for|rain",
    "p20": "I|MADE|A|PICTURE‼️|What|do|you|think|❓ 🌟 🤖",
    "p21": "I|MADE|A|PICTURE‼️|What|do|you|think|❓ 🌟 🤖",
    "p22": "Are|you|coming|tonight❔",
    "p23": "Stop|right|there❗",
}


def pos_suite():
    rows = []
    merged = []
    for i, (gold, text, target) in enumerate(POS, start=1):
        pid = f"p{i:02d}"
        assert text.count(target) >= 1, (pid, target)
        rows.append({"id": pid, "text": text,
                     "targets": [{"text": target, "occurrence": 0, "gold": gold}]})
        tokens = MERGED[pid].split("|") if pid in MERGED else text.split(" ")
        assert "".join(tokens).replace(" ", "") == text.replace(" ", ""), pid
        merged.append({"id": pid, "tokens": tokens})
    return rows, merged


# --- sentiment --------------------------------------------------------------

NEUTRAL = [
    "They decided to release it",
    "Let's go for it",
    "They are going to start a direct flight soon",
    "I'll explain it later",
    "The meeting is at three",
    "We are moving to a new office next week",
    "She read the report this morning",
    "The train leaves from platform four",
    "He will call you tomorrow",
    "The store closes at nine",
]
POSITIVE = ["😍", "😊", "🦄", "🎉", "😘", "👍", "💕", "🙌", "😁", "❤️"]
NEGATIVE = ["😞", "🙄", "😠", "😒", "😩", "😔", "😫", "😤", "💀", "😡"]


def sentiment_suite():
    rows = []
    for i, text in enumerate(NEUTRAL, start=1):
        rows.append({"id": f"s{i:02d}-ns", "text": text, "condition": "NS", "gold": "Neutral"})
        rows.append({"id": f"s{i:02d}-pos", "text": f"{text} {POSITIVE[i - 1]}", "condition": "PosEmoji",
                     "gold": "Positive"})
        rows.append({"id": f"s{i:02d}-neg", "text": f"{text} {NEGATIVE[i - 1]}", "condition": "NegEmoji",
                     "gold": "Negative"})
    return rows


MODERATION = [
    ("They decided to release it", "🗨️", "Neutral", "Negative", "Negative"),
    ("They decided to release it", "😞", "Neutral", "Negative", "Negative"),
    ("Let's go for it", "🦄", "Neutral", "Positive", "Positive"),
    ("My driver license is expired by little over a month", "😞", "Negative", "Negative", "Negative"),
    ("They are going to start a direct flight soon", "😞", "Neutral", "Negative", "Negative"),
    ("They are going to start a direct flight soon", "😍", "Neutral", "Positive", "Positive"),
    ("I'll explain it later", "😍", "Neutral", "Positive", "Positive"),
]


def moderation_examples():
    return [{"id": f"m{i:02d}", "text": f"{text} {emoji}", "sentence": text, "emoji": emoji,
             "text_only": t, "emoji_only": e, "combined": c}
            for i, (text, emoji, t, e, c) in enumerate(MODERATION, start=1)]


# --- embeddings -------------------------------------------------------------

# Dimensions: five tone axes, a hand-gesture axis, a family axis, a word axis.
DIM = 16
TONED_BASES = ["👏", "👍", "🙌", "👋", "💪", "🙏"]


def unit(axis, weight=1.0):
    v = [0.0] * DIM
    v[axis] = weight
    return v


def add(*vs):
    return [sum(c) for c in zip(*vs)]


def scale(v, k):
    return [x * k for x in v]


def embedding_rows():
    rows = {}
    gesture = unit(5)
    for t, tone in enumerate(TONES):
        for j, base in enumerate(TONED_BASES):
            # Tone axis plus one private axis per base, so same-tone tokens sit
            # at a moderate angle from each other.
            rows[base + tone] = add(unit(t), unit(8 + j, 0.6), scale(gesture, 0.3), unit(7, 0.01 * (j + 1)))
    # Intruders: each ranks inside the top 5 of one clapping-hands query of a
    # neighbouring tone while its own top 5 stays with its own tone.
    rows["🤞" + LIGHT] = add(unit(0, 0.5), unit(1, 0.45), unit(8, 0.3), scale(gesture, 0.3))
    rows["🤞" + MEDIUM_DARK] = add(unit(3, 0.5), unit(2, 0.45), unit(8, 0.3), scale(gesture, 0.3))
    for j, base in enumerate(TONED_BASES):
        rows[base] = add(scale(gesture, 1.0), unit(7, 0.05 * (j + 1)))
    family = [FAMILY_MWGB, zwj("\U0001F468", "\U0001F469", "\U0001F467"), zwj("\U0001F469", "\U0001F469", "\U0001F466"),
              "👪", "🏠", "❤️"]
    for j, tok in enumerate(family):
        rows[tok] = add(unit(6), unit(7, 0.03 * j))
    rows["clap"] = add(scale(gesture, 0.9), unit(0, 0.25), unit(1, 0.25), unit(7, 0.4))
    rows["applause"] = add(scale(gesture, 0.9), unit(2, 0.25), unit(7, 0.4))
    rows["family"] = add(unit(6), unit(7, 0.5))
    return rows


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    return dot / (math.sqrt(sum(x * x for x in a)) * math.sqrt(sum(y * y for y in b)))


def is_emoji_token(tok):
    return not tok.isascii()


def tone_set(tok):
    return {c for c in tok if c in TONES}


def brute_consistency(rows, query, k=5):
    ranked = sorted((t for t in rows if t != query and is_emoji_token(t)),
                    key=lambda t: (-cosine(rows[query], rows[t]), t))[:k]
    return sum(tone_set(t) == tone_set(query) for t in ranked) / k


def check_embeddings(rows):
    expected = {LIGHT: 1.0, MEDIUM_LIGHT: 0.8, MEDIUM: 0.8, MEDIUM_DARK: 1.0, DARK: 1.0}
    for tone, want in expected.items():
        got = brute_consistency(rows, "👏" + tone)
        assert got == want, ("👏" + tone, got)
    for tok in rows:
        if tone_set(tok):
            assert brute_consistency(rows, tok) >= 0.8, tok


def write_jsonl(name, rows):
    with open(HERE / name, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    write_jsonl("tokenization_suite.jsonl", tokenization_suite())
    pos, merged = pos_suite()
    write_jsonl("pos_suite.jsonl", pos)
    write_jsonl("pos_merged_tokens.jsonl", merged)
    write_jsonl("sentiment_suite.jsonl", sentiment_suite())
    write_jsonl("moderation_examples.jsonl", moderation_examples())

    rows = embedding_rows()
    check_embeddings(rows)
    with open(HERE / "embeddings_fixture.txt", "w", encoding="utf-8") as f:
        f.write(f"{len(rows)} {DIM}\n")
        for tok, vec in rows.items():
            f.write(tok + " " + " ".join(f"{x:.6f}" for x in vec) + "\n")


if __name__ == "__main__":
    main()

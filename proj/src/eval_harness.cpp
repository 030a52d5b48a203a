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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "emojiseg/error.hpp"
#include "text_table.hpp"

namespace emojiseg {
namespace {

using nlohmann::json;

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

template <typename Fn>
void for_each_json_line(std::string_view data, std::string_view source, Fn&& fn) {
  const std::string src(source);
  detail::for_each_record(data, [&](std::size_t line, std::string_view text) {
    try {
      const json value = json::parse(text);
      if (!value.is_object()) throw ParseError(src, line, "expected a JSON object");
      fn(line, value);
    } catch (const json::exception& e) {
      throw ParseError(src, line, e.what());
    }
  });
}

std::string required_string(const json& obj, const char* key, const std::string& src, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(src, line, std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

const json& required_array(const json& obj, const char* key, const std::string& src, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw ParseError(src, line, std::string("missing array field \"") + key + "\"");
  }
  return *it;
}

template <typename Map>
void insert_unique(Map& map, const std::string& id, typename Map::mapped_type value, const std::string& src,
                   std::size_t line) {
  if (!map.emplace(id, std::move(value)).second) throw ParseError(src, line, "duplicate id '" + id + "'");
}

void check_unique_id(std::set<std::string>& ids, const std::string& id, const std::string& src, std::size_t line) {
  if (!ids.insert(id).second) throw ParseError(src, line, "duplicate id '" + id + "'");
}

CategoryScore& category(std::vector<CategoryScore>& cats, std::string_view name) {
  for (auto& c : cats) {
    if (c.name == name) return c;
  }
  throw Error("unknown category " + std::string(name));
}

void record(CategoryScore& cat, bool pass, const std::string& id) {
  ++cat.count;
  if (pass) {
    ++cat.passed;
  } else {
    cat.failed_ids.push_back(id);
  }
}

void finish(Report& report) {
  for (auto& cat : report.categories) std::sort(cat.failed_ids.begin(), cat.failed_ids.end());
  std::sort(report.flagged.begin(), report.flagged.end());
}

// Width in code points.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string pad_left(std::string_view s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + std::string(s);
}

std::string pad_right(std::string_view s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(s) + std::string(width > w ? width - w : 0, ' ');
}

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round1(v));
  return buf;
}

std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = display_width(header[c]);
    for (const auto& row : rows) widths[c] = std::max(widths[c], display_width(row[c]));
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += "  ";
      line += c == 0 ? pad_right(cells[c], widths[c]) : pad_left(cells[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

// --- tag tables -------------------------------------------------------------

struct TagEntry {
  std::string_view tag;
  CoarsePos pos;
};

constexpr std::array<TagEntry, 52> kPennTags{{
    {"NN", CoarsePos::kNoun},         {"NNS", CoarsePos::kNoun},        {"NNP", CoarsePos::kNoun},
    {"NNPS", CoarsePos::kNoun},       {"JJ", CoarsePos::kAdjective},    {"JJR", CoarsePos::kAdjective},
    {"JJS", CoarsePos::kAdjective},   {"VB", CoarsePos::kVerb},         {"VBD", CoarsePos::kVerb},
    {"VBG", CoarsePos::kVerb},        {"VBN", CoarsePos::kVerb},        {"VBP", CoarsePos::kVerb},
    {"VBZ", CoarsePos::kVerb},        {"RB", CoarsePos::kAdverb},       {"RBR", CoarsePos::kAdverb},
    {"RBS", CoarsePos::kAdverb},      {".", CoarsePos::kPunctuation},   {",", CoarsePos::kPunctuation},
    {":", CoarsePos::kPunctuation},   {"``", CoarsePos::kPunctuation},  {"''", CoarsePos::kPunctuation},
    {"-LRB-", CoarsePos::kPunctuation}, {"-RRB-", CoarsePos::kPunctuation}, {"-LCB-", CoarsePos::kPunctuation},
    {"-RCB-", CoarsePos::kPunctuation}, {"-LSB-", CoarsePos::kPunctuation}, {"-RSB-", CoarsePos::kPunctuation},
    {"(", CoarsePos::kPunctuation},   {")", CoarsePos::kPunctuation},   {"HYPH", CoarsePos::kPunctuation},
    {"NFP", CoarsePos::kPunctuation}, {"CC", CoarsePos::kOther},        {"CD", CoarsePos::kOther},
    {"DT", CoarsePos::kOther},        {"EX", CoarsePos::kOther},        {"FW", CoarsePos::kOther},
    {"IN", CoarsePos::kOther},        {"LS", CoarsePos::kOther},        {"MD", CoarsePos::kOther},
    {"PDT", CoarsePos::kOther},       {"POS", CoarsePos::kOther},       {"PRP", CoarsePos::kOther},
    {"PRP$", CoarsePos::kOther},      {"RP", CoarsePos::kOther},        {"SYM", CoarsePos::kOther},
    {"TO", CoarsePos::kOther},        {"UH", CoarsePos::kOther},        {"WDT", CoarsePos::kOther},
    {"WP", CoarsePos::kOther},        {"WP$", CoarsePos::kOther},       {"WRB", CoarsePos::kOther},
    {"$", CoarsePos::kOther},
}};

// Tags that Penn-style taggers add on top of the 45-tag core.
constexpr std::array<TagEntry, 8> kPennExtraTags{{
    {"#", CoarsePos::kOther},  {"ADD", CoarsePos::kOther}, {"AFX", CoarsePos::kOther}, {"GW", CoarsePos::kOther},
    {"XX", CoarsePos::kOther}, {"HT", CoarsePos::kOther},  {"USR", CoarsePos::kOther}, {"URL", CoarsePos::kOther},
}};

constexpr std::array<TagEntry, 17> kUposTags{{
    {"NOUN", CoarsePos::kNoun},   {"PROPN", CoarsePos::kNoun}, {"ADJ", CoarsePos::kAdjective},
    {"VERB", CoarsePos::kVerb},   {"AUX", CoarsePos::kVerb},   {"ADV", CoarsePos::kAdverb},
    {"PUNCT", CoarsePos::kPunctuation}, {"ADP", CoarsePos::kOther}, {"CCONJ", CoarsePos::kOther},
    {"DET", CoarsePos::kOther},   {"INTJ", CoarsePos::kOther}, {"NUM", CoarsePos::kOther},
    {"PART", CoarsePos::kOther},  {"PRON", CoarsePos::kOther}, {"SCONJ", CoarsePos::kOther},
    {"SYM", CoarsePos::kOther},   {"X", CoarsePos::kOther},
}};

template <std::size_t N>
std::optional<CoarsePos> find_tag(const std::array<TagEntry, N>& table, std::string_view tag) {
  for (const auto& e : table) {
    if (e.tag == tag) return e.pos;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<CoarsePos, std::string_view>, 6> kCoarseNames{{
    {CoarsePos::kNoun, "Noun"},
    {CoarsePos::kAdjective, "Adjective"},
    {CoarsePos::kVerb, "Verb"},
    {CoarsePos::kAdverb, "Adverb"},
    {CoarsePos::kPunctuation, "Punctuation"},
    {CoarsePos::kOther, "Other"},
}};

constexpr std::array<std::pair<SentimentCondition, std::string_view>, 3> kConditionNames{{
    {SentimentCondition::kNeutralSentence, "NS"},
    {SentimentCondition::kPositiveEmoji, "PosEmoji"},
    {SentimentCondition::kNegativeEmoji, "NegEmoji"},
}};

std::string_view condition_label(SentimentCondition c) {
  switch (c) {
    case SentimentCondition::kPositiveEmoji:
      return "+ve";
    case SentimentCondition::kNegativeEmoji:
      return "-ve";
    case SentimentCondition::kNeutralSentence:
      break;
  }
  return "NS";
}

}  // namespace

// --- reports ----------------------------------------------------------------

double CategoryScore::pct() const noexcept {
  return count == 0 ? 0.0 : 100.0 * static_cast<double>(passed) / static_cast<double>(count);
}

std::size_t Report::total() const noexcept {
  std::size_t n = 0;
  for (const auto& c : categories) n += c.count;
  return n;
}

std::size_t Report::passed() const noexcept {
  std::size_t n = 0;
  for (const auto& c : categories) n += c.passed;
  return n;
}

double Report::average() const noexcept {
  const std::size_t n = total();
  return n == 0 ? 0.0 : 100.0 * static_cast<double>(passed()) / static_cast<double>(n);
}

double round1(double pct) noexcept {
  const double scaled = std::abs(pct) * 10.0;
  const double rounded = std::floor(scaled + 0.5 + 1e-9) / 10.0;
  return pct < 0 ? -rounded : rounded;
}

json report_to_json(const Report& report) {
  json cats = json::array();
  for (const auto& c : report.categories) {
    cats.push_back({{"name", c.name},
                    {"label", c.label},
                    {"count", c.count},
                    {"passed", c.passed},
                    {"pct", round1(c.pct())},
                    {"failed_ids", c.failed_ids}});
  }
  return {{"title", report.title},
          {"categories", std::move(cats)},
          {"total", report.total()},
          {"passed", report.passed()},
          {"average", round1(report.average())},
          {"flagged", report.flagged}};
}

Report report_from_json(const json& value) {
  try {
    Report report;
    report.title = value.value("title", std::string{});
    for (const auto& c : value.at("categories")) {
      CategoryScore cat;
      cat.name = c.at("name").get<std::string>();
      cat.label = c.value("label", cat.name);
      cat.count = c.at("count").get<std::size_t>();
      cat.passed = c.at("passed").get<std::size_t>();
      if (cat.passed > cat.count) throw Error("category " + cat.name + " passes more cases than it has");
      cat.failed_ids = c.value("failed_ids", std::vector<std::string>{});
      report.categories.push_back(std::move(cat));
    }
    report.flagged = value.value("flagged", std::vector<std::string>{});
    return report;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string render_report_table(const Report& report) {
  std::vector<std::string> header{report.title.empty() ? std::string("Tool") : report.title};
  std::vector<std::string> pct_row{"Success %"};
  std::vector<std::string> count_row{"Cases"};
  for (const auto& c : report.categories) {
    header.push_back(c.label);
    pct_row.push_back(fixed1(c.pct()));
    count_row.push_back(std::to_string(c.count));
  }
  header.emplace_back("Average");
  pct_row.push_back(fixed1(report.average()));
  count_row.push_back(std::to_string(report.total()));
  std::string out = render_grid(header, {pct_row, count_row});
  for (const auto& note : report.flagged) out += "note: " + note + "\n";
  return out;
}

// --- tokenization -----------------------------------------------------------

std::optional<EmojiCase> emoji_case_from_string(std::string_view name) noexcept {
  std::string s = ascii_lower(detail::trim(name));
  if (s.starts_with("case")) s.erase(0, 4);
  const std::string_view digits = detail::trim(s);
  if (digits.size() != 1 || digits[0] < '1' || digits[0] > '0' + kEmojiCaseCount) return std::nullopt;
  return static_cast<EmojiCase>(digits[0] - '0');
}

std::string case_name(EmojiCase c) { return "Case " + std::to_string(static_cast<int>(c)); }

std::string_view case_label(EmojiCase c) noexcept {
  constexpr std::array<std::string_view, kEmojiCaseCount> kLabels = {"SE", "GE", "STE", "BMP", "SMP", "ZWJ"};
  const int i = static_cast<int>(c) - 1;
  return i >= 0 && i < kEmojiCaseCount ? kLabels[static_cast<std::size_t>(i)] : std::string_view{};
}

std::vector<GoldTokenExample> load_gold_tokens(std::string_view data, std::string_view source) {
  const std::string src(source);
  std::vector<GoldTokenExample> out;
  std::set<std::string> ids;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    GoldTokenExample ex;
    ex.id = required_string(obj, "id", src, line);
    ex.text = required_string(obj, "text", src, line);
    const auto it = obj.find("case");
    if (it == obj.end()) throw ParseError(src, line, "missing field \"case\"");
    const std::string case_text = it->is_number_integer() ? std::to_string(it->get<int>()) : it->get<std::string>();
    const auto c = emoji_case_from_string(case_text);
    if (!c) throw ParseError(src, line, "unknown case '" + case_text + "'");
    ex.emoji_case = *c;
    for (const auto& t : required_array(obj, "gold_tokens", src, line)) ex.gold_tokens.push_back(t.get<std::string>());
    if (ex.gold_tokens.empty() && !detail::trim(ex.text).empty()) {
      throw ParseError(src, line, "gold_tokens is empty for non-empty text");
    }
    check_unique_id(ids, ex.id, src, line);
    out.push_back(std::move(ex));
  });
  return out;
}

TokenPredictions load_token_predictions(std::string_view data, std::string_view source) {
  const std::string src(source);
  TokenPredictions out;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    const std::string id = required_string(obj, "id", src, line);
    std::vector<std::string> tokens;
    for (const auto& t : required_array(obj, "tokens", src, line)) {
      tokens.push_back(t.is_object() ? t.at("text").get<std::string>() : t.get<std::string>());
    }
    insert_unique(out, id, std::move(tokens), src, line);
  });
  return out;
}

Report score_tokens(const Registry& registry, const std::vector<GoldTokenExample>& golds,
                    const TokenPredictions& preds, const NormalizeOptions& options) {
  Report report;
  report.title = "Tokenization";
  for (int i = 1; i <= kEmojiCaseCount; ++i) {
    const auto c = static_cast<EmojiCase>(i);
    report.categories.push_back({case_name(c), std::string(case_label(c)), 0, 0, {}});
  }
  for (const auto& gold : golds) {
    const auto it = preds.find(gold.id);
    if (it == preds.end()) throw MissingPredictionError(gold.id);
    const bool pass = normalize_strings(registry, it->second, options) ==
                      normalize_strings(registry, gold.gold_tokens, options);
    record(report.categories[static_cast<std::size_t>(gold.emoji_case) - 1], pass, gold.id);
  }
  finish(report);
  return report;
}

// --- part of speech ---------------------------------------------------------

std::string_view to_string(CoarsePos pos) noexcept {
  for (const auto& [p, name] : kCoarseNames) {
    if (p == pos) return name;
  }
  return "Other";
}

std::optional<CoarsePos> coarse_pos_from_string(std::string_view name) noexcept {
  const std::string s = ascii_lower(detail::trim(name));
  for (const auto& [p, n] : kCoarseNames) {
    if (ascii_lower(n) == s) return p;
  }
  if (s == "adj") return CoarsePos::kAdjective;
  if (s == "adv") return CoarsePos::kAdverb;
  if (s == "punct") return CoarsePos::kPunctuation;
  return std::nullopt;
}

std::string_view to_string(Tagset tagset) noexcept {
  return tagset == Tagset::kPennTreebank ? "PennTreebank" : "UniversalPOS";
}

std::optional<Tagset> tagset_from_string(std::string_view name) noexcept {
  const std::string s = ascii_lower(detail::trim(name));
  if (s == "penntreebank" || s == "penn" || s == "ptb") return Tagset::kPennTreebank;
  if (s == "universalpos" || s == "upos" || s == "universal") return Tagset::kUniversalPos;
  return std::nullopt;
}

CoarsePos map_to_coarse(Tagset tagset, std::string_view tag) {
  std::optional<CoarsePos> pos;
  if (tagset == Tagset::kPennTreebank) {
    pos = find_tag(kPennTags, tag);
    if (!pos) pos = find_tag(kPennExtraTags, tag);
  } else {
    pos = find_tag(kUposTags, tag);
  }
  if (!pos) throw UnknownTagError("unknown " + std::string(to_string(tagset)) + " tag '" + std::string(tag) + "'");
  return *pos;
}

std::vector<GoldPosExample> load_gold_pos(std::string_view data, std::string_view source) {
  const std::string src(source);
  std::vector<GoldPosExample> out;
  std::set<std::string> ids;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    GoldPosExample ex;
    ex.id = required_string(obj, "id", src, line);
    ex.text = required_string(obj, "text", src, line);
    for (const auto& t : required_array(obj, "targets", src, line)) {
      PosTarget target;
      target.text = t.at("text").get<std::string>();
      target.occurrence = t.value("occurrence", std::size_t{0});
      const std::string gold = t.at("gold").get<std::string>();
      const auto pos = coarse_pos_from_string(gold);
      if (!pos || *pos == CoarsePos::kOther) throw ParseError(src, line, "invalid gold class '" + gold + "'");
      target.gold = *pos;
      ex.targets.push_back(std::move(target));
    }
    check_unique_id(ids, ex.id, src, line);
    out.push_back(std::move(ex));
  });
  return out;
}

PosPredictions load_pos_predictions(std::string_view data, std::string_view source) {
  const std::string src(source);
  PosPredictions out;
  bool have_header = false;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    if (!have_header) {
      const std::string name = required_string(obj, "tagset", src, line);
      const auto tagset = tagset_from_string(name);
      if (!tagset) throw ParseError(src, line, "unknown tagset '" + name + "'");
      out.tagset = *tagset;
      have_header = true;
      return;
    }
    const std::string id = required_string(obj, "id", src, line);
    std::vector<TaggedToken> tagged;
    for (const auto& t : required_array(obj, "tagged", src, line)) {
      if (t.is_array()) {
        tagged.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>()});
      } else {
        tagged.push_back({t.at("text").get<std::string>(), t.at("tag").get<std::string>()});
      }
    }
    insert_unique(out.tagged, id, std::move(tagged), src, line);
  });
  if (!have_header) throw ParseError(src, 1, "missing {\"tagset\": ...} header line");
  return out;
}

Report score_pos(const Registry& registry, const std::vector<GoldPosExample>& golds, const PosPredictions& preds) {
  Report report;
  report.title = "Emoji POS";
  for (int i = 0; i < kGoldPosClassCount; ++i) {
    const std::string name(to_string(static_cast<CoarsePos>(i)));
    report.categories.push_back({name, name, 0, 0, {}});
  }

  for (const auto& gold : golds) {
    const auto it = preds.tagged.find(gold.id);
    if (it == preds.tagged.end()) throw MissingPredictionError(gold.id);
    const auto& tagged = it->second;

    // Every predicted token split into sub-tokens, each remembering its owner.
    std::vector<std::pair<std::string, std::size_t>> units;
    for (std::size_t t = 0; t < tagged.size(); ++t) {
      for (auto& sub : tokenize(registry, tagged[t].text)) units.emplace_back(std::move(sub.text), t);
    }

    for (const auto& target : gold.targets) {
      const bool atomic = tokenize(registry, target.text).size() == 1;
      std::optional<std::size_t> owner;
      std::size_t seen = 0;
      if (atomic) {
        for (const auto& [text, t] : units) {
          if (text == target.text && seen++ == target.occurrence) {
            owner = t;
            break;
          }
        }
      } else {
        for (std::size_t t = 0; t < tagged.size(); ++t) {
          if (tagged[t].text == target.text && seen++ == target.occurrence) {
            owner = t;
            break;
          }
        }
      }
      const std::string name(to_string(target.gold));
      if (!owner) {
        report.flagged.push_back(gold.id + ": target '" + target.text + "' occurrence " +
                                 std::to_string(target.occurrence) + " not found in predicted tokens");
        record(category(report.categories, name), false, gold.id);
        continue;
      }
      const bool pass = map_to_coarse(preds.tagset, tagged[*owner].tag) == target.gold;
      record(category(report.categories, name), pass, gold.id);
    }
  }
  finish(report);
  return report;
}

// --- sentiment --------------------------------------------------------------

std::optional<SentimentCondition> condition_from_string(std::string_view name) noexcept {
  const std::string s = ascii_lower(detail::trim(name));
  if (s == "ns") return SentimentCondition::kNeutralSentence;
  if (s == "posemoji" || s == "+ve") return SentimentCondition::kPositiveEmoji;
  if (s == "negemoji" || s == "-ve") return SentimentCondition::kNegativeEmoji;
  return std::nullopt;
}

std::string_view to_string(SentimentCondition condition) noexcept {
  for (const auto& [c, name] : kConditionNames) {
    if (c == condition) return name;
  }
  return "NS";
}

std::vector<SentimentExample> load_sentiment_suite(std::string_view data, std::string_view source) {
  const std::string src(source);
  std::vector<SentimentExample> out;
  std::set<std::string> ids;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    SentimentExample ex;
    ex.id = required_string(obj, "id", src, line);
    ex.text = required_string(obj, "text", src, line);
    const std::string cond = required_string(obj, "condition", src, line);
    const auto c = condition_from_string(cond);
    if (!c) throw ParseError(src, line, "unknown condition '" + cond + "'");
    ex.condition = *c;
    const std::string gold = required_string(obj, "gold", src, line);
    const auto p = polarity_from_string(gold);
    if (!p) throw ParseError(src, line, "unknown polarity '" + gold + "'");
    ex.gold = *p;
    check_unique_id(ids, ex.id, src, line);
    out.push_back(std::move(ex));
  });
  return out;
}

SentimentPredictions load_sentiment_predictions(std::string_view data, std::string_view source) {
  const std::string src(source);
  SentimentPredictions out;
  for_each_json_line(data, source, [&](std::size_t line, const json& obj) {
    const std::string id = required_string(obj, "id", src, line);
    const std::string name = required_string(obj, "polarity", src, line);
    const auto p = polarity_from_string(name);
    if (!p) throw ParseError(src, line, "unknown polarity '" + name + "'");
    insert_unique(out, id, *p, src, line);
  });
  return out;
}

Report score_sentiment(const std::vector<SentimentExample>& examples, const SentimentPredictions& preds) {
  Report report;
  report.title = "Sentiment";
  for (const auto& [c, name] : kConditionNames) {
    report.categories.push_back({std::string(name), std::string(condition_label(c)), 0, 0, {}});
  }
  for (const auto& ex : examples) {
    const auto it = preds.find(ex.id);
    if (it == preds.end()) throw MissingPredictionError(ex.id);
    record(category(report.categories, to_string(ex.condition)), it->second == ex.gold, ex.id);
  }
  finish(report);
  return report;
}

// --- support matrix ---------------------------------------------------------

SupportMatrix render_support_matrix(const std::map<std::string, Report>& reports, double threshold) {
  SupportMatrix matrix;
  matrix.threshold = threshold;
  bool first = true;
  for (const auto& [tool, report] : reports) {
    std::vector<std::string> labels;
    std::vector<bool> cells;
    for (const auto& c : report.categories) {
      labels.push_back(c.label);
      cells.push_back(c.pct() >= threshold);
    }
    if (first) {
      matrix.columns = labels;
      first = false;
    } else if (labels != matrix.columns) {
      throw Error("report for '" + tool + "' has different categories than the other reports");
    }
    matrix.rows.emplace_back(tool, std::move(cells));
  }
  return matrix;
}

std::string render_matrix_table(const SupportMatrix& matrix) {
  std::vector<std::string> header{"Tool"};
  header.insert(header.end(), matrix.columns.begin(), matrix.columns.end());
  std::vector<std::vector<std::string>> rows;
  for (const auto& [tool, cells] : matrix.rows) {
    std::vector<std::string> row{tool};
    for (bool ok : cells) row.emplace_back(ok ? "✓" : "✗");
    rows.push_back(std::move(row));
  }
  std::string out = render_grid(header, rows);
  char footer[256];
  std::snprintf(footer, sizeof footer,
                "✓ = category success >= %.1f%%. The threshold is configurable; hand-made support\n"
                "tables rarely agree with one cut-off, so compare at more than one value.\n",
                matrix.threshold);
  return out + footer;
}

json matrix_to_json(const SupportMatrix& matrix) {
  json rows = json::array();
  for (const auto& [tool, cells] : matrix.rows) rows.push_back({{"tool", tool}, {"supported", cells}});
  return {{"threshold", matrix.threshold}, {"columns", matrix.columns}, {"rows", std::move(rows)}};
}

}  // namespace emojiseg

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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "emojiseg/baseline_annotators.hpp"
#include "emojiseg/case_classifier.hpp"
#include "emojiseg/codepoint_registry.hpp"
#include "emojiseg/embedding_neighbors.hpp"
#include "emojiseg/emoji_segmenter.hpp"
#include "emojiseg/emoji_sentiment.hpp"
#include "emojiseg/error.hpp"
#include "emojiseg/eval_harness.hpp"
#include "emojiseg/tweet_tokenizer.hpp"
#include "emojiseg/utf8.hpp"

namespace emojiseg::cli {
namespace {

using nlohmann::json;

constexpr const char* kRegistryEnv = "EMOJISEG_REGISTRY";

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string registry;

  std::string gold;
  std::string pred;
  std::string title;
  bool keep_punct = false;
  bool strict_hashtags = false;
  bool lenient_mentions = false;

  bool retokenize = false;
  bool no_lexicon = false;
  std::string lexicon;
  std::string text_lexicon;

  double w_text = 1.0;
  double w_emoji = 1.0;
  double sentiment_threshold = kDefaultPolarityThreshold;
  double matrix_threshold = kDefaultSupportThreshold;
  std::vector<std::string> reports;

  std::string embeddings;
  std::string token;
  std::size_t k = 5;
  bool emoji_only = false;
};

struct Record {
  std::string id;
  std::string text;
  std::optional<std::vector<std::string>> tokens;
};

std::string dump(const json& value) { return value.dump(-1, ' ', false, json::error_handler_t::replace); }

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

class Io {
 public:
  Io(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {
    if (!opts_.out.empty()) {
      file_.open(opts_.out, std::ios::binary);
      if (!file_) throw Error("cannot open '" + opts_.out + "' for writing");
    }
  }

  /// The main input: --in, or standard input.
  std::pair<std::string, std::string> input() const {
    if (!opts_.in.empty()) return {read_file(opts_.in), opts_.in};
    return {std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()), "<stdin>"};
  }

  std::ostream& out() { return opts_.out.empty() ? out_ : file_; }
  bool table() const { return opts_.format == "table"; }

 private:
  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
  std::ofstream file_;
};

// Each line is a JSON object ({"id", "text"} or {"id", "tokens"}) or, when it
// does not start with '{', raw text whose id is the line number.
std::vector<Record> read_records(std::string_view data, const std::string& source) {
  std::vector<Record> records;
  std::size_t line_no = 0;
  while (!data.empty()) {
    const auto nl = data.find('\n');
    std::string_view line = data.substr(0, nl);
    data = nl == std::string_view::npos ? std::string_view{} : data.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    Record rec;
    rec.id = std::to_string(line_no);
    if (line.front() != '{') {
      rec.text = std::string(line);
      records.push_back(std::move(rec));
      continue;
    }
    try {
      const json obj = json::parse(line);
      if (const auto it = obj.find("id"); it != obj.end()) {
        rec.id = it->is_string() ? it->get<std::string>() : it->dump();
      }
      if (const auto it = obj.find("tokens"); it != obj.end()) {
        std::vector<std::string> tokens;
        for (const auto& t : *it) tokens.push_back(t.is_object() ? t.at("text").get<std::string>() : t.get<std::string>());
        rec.tokens = std::move(tokens);
      }
      if (const auto it = obj.find("text"); it != obj.end()) {
        rec.text = it->get<std::string>();
      } else if (!rec.tokens) {
        throw ParseError(source, line_no, "record has neither \"text\" nor \"tokens\"");
      }
    } catch (const json::exception& e) {
      throw ParseError(source, line_no, e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

class Context {
 public:
  Context(const Options& opts, std::istream& in, std::ostream& out) : opts(opts), io(opts, in, out) {}

  const Registry& registry() {
    if (registry_ptr_) return *registry_ptr_;
    std::string path = opts.registry;
    if (path.empty()) {
      if (const char* env = std::getenv(kRegistryEnv)) path = env;
    }
    if (path.empty()) {
      registry_ptr_ = &Registry::bundled();
    } else {
      owned_registry_ = Registry::load(read_file(path), path);
      registry_ptr_ = &*owned_registry_;
    }
    return *registry_ptr_;
  }

  std::vector<Record> records() {
    const auto [data, source] = io.input();
    return read_records(data, source);
  }

  const Options& opts;
  Io io;

 private:
  std::optional<Registry> owned_registry_;
  const Registry* registry_ptr_ = nullptr;
};

// --- per-record commands ----------------------------------------------------

json sequence_json(const EmojiSequence& seq) {
  json tones = json::array();
  for (char32_t t : seq.skin_tones) tones.push_back(std::string(tone_name(tone_index(t))));
  return {{"text", seq.utf8()},
          {"kind", std::string(to_string(seq.kind))},
          {"codepoints", utf8::format_codepoints(seq.codepoints)},
          {"skin_tones", std::move(tones)},
          {"plane", seq.max_plane.index},
          {"degenerate", seq.degenerate}};
}

int cmd_tokenize(Context& ctx) {
  const Registry& reg = ctx.registry();
  for (const auto& rec : ctx.records()) {
    const auto tokens = tokenize(reg, rec.text);
    if (ctx.io.table()) {
      std::string line = rec.id + "\t";
      for (std::size_t i = 0; i < tokens.size(); ++i) line += (i ? " | " : "") + tokens[i].text;
      ctx.io.out() << line << '\n';
      continue;
    }
    json arr = json::array();
    for (const auto& t : tokens) {
      json tok = {{"text", t.text}, {"kind", std::string(to_string(t.kind))}, {"begin", t.span.begin}, {"end", t.span.end}};
      if (t.emoji) tok["sequence"] = std::string(to_string(t.emoji->kind));
      arr.push_back(std::move(tok));
    }
    ctx.io.out() << dump({{"id", rec.id}, {"tokens", std::move(arr)}}) << '\n';
  }
  return kExitOk;
}

int cmd_segment(Context& ctx) {
  const Registry& reg = ctx.registry();
  for (const auto& rec : ctx.records()) {
    json seqs = json::array();
    std::string line = rec.id;
    for (const auto& t : tokenize(reg, rec.text)) {
      if (!t.emoji) continue;
      seqs.push_back(sequence_json(*t.emoji));
      line += "\t" + t.text + " " + std::string(to_string(t.emoji->kind)) + " (" +
              utf8::format_codepoints(t.emoji->codepoints) + ")";
    }
    if (ctx.io.table()) {
      ctx.io.out() << line << '\n';
    } else {
      ctx.io.out() << dump({{"id", rec.id}, {"sequences", std::move(seqs)}}) << '\n';
    }
  }
  return kExitOk;
}

json labels_json(const CaseLabels& l) {
  json tones = json::object();
  for (std::size_t t = 0; t < kToneCount; ++t) tones[std::string(tone_name(t))] = l.tone_counts[t];
  return {{"single_emoji_spaced", l.single_emoji_spaced},
          {"single_emoji_unspaced", l.single_emoji_unspaced},
          {"multi_positions", l.multi_positions},
          {"multi_spaced", l.multi_spaced},
          {"multi_cluster", l.multi_cluster},
          {"skin_tone_present", l.skin_tone_present},
          {"bmp_emoji_present", l.bmp_emoji_present},
          {"non_bmp_emoji_present", l.non_bmp_emoji_present},
          {"zwj_present", l.zwj_present},
          {"tone_counts", std::move(tones)},
          {"emoji_count", l.emoji_count}};
}

int cmd_classify(Context& ctx) {
  const Registry& reg = ctx.registry();
  for (const auto& rec : ctx.records()) {
    const json labels = labels_json(classify_tweet(reg, rec.text));
    if (ctx.io.table()) {
      std::string line = rec.id + "\t";
      bool first = true;
      for (const auto& [name, value] : labels.items()) {
        if (value.is_boolean() && value.get<bool>()) {
          line += (first ? "" : " ") + name;
          first = false;
        }
      }
      ctx.io.out() << line << '\n';
    } else {
      ctx.io.out() << dump({{"id", rec.id}, {"labels", labels}}) << '\n';
    }
  }
  return kExitOk;
}

int cmd_stats(Context& ctx) {
  const Registry& reg = ctx.registry();
  StatsAccumulator acc;
  for (const auto& rec : ctx.records()) acc.add(reg, rec.text);
  const StatsReport r = acc.report();
  if (ctx.io.table()) {
    ctx.io.out() << render_stats_table(r);
    return kExitOk;
  }
  json per_tone = json::object();
  json pct_tone = json::object();
  for (std::size_t t = 0; t < kToneCount; ++t) {
    per_tone[std::string(tone_name(t))] = r.per_tone[t];
    pct_tone[std::string(tone_name(t))] = r.percent(r.per_tone[t]);
  }
  const json out = {{"total", r.total},
                    {"unique", r.unique},
                    {"emoji_tweets", r.emoji_tweets},
                    {"single", r.single},
                    {"multiple", r.multiple},
                    {"skin_tone", r.skin_tone},
                    {"per_tone", per_tone},
                    {"zwj", r.zwj},
                    {"percent",
                     {{"unique", r.percent(r.unique)},
                      {"single", r.percent(r.single)},
                      {"multiple", r.percent(r.multiple)},
                      {"skin_tone", r.percent(r.skin_tone)},
                      {"per_tone", pct_tone},
                      {"zwj", r.percent(r.zwj)}}}};
  ctx.io.out() << dump(out) << '\n';
  return kExitOk;
}

// --- scoring ----------------------------------------------------------------

std::pair<std::string, std::string> predictions(Context& ctx) {
  if (!ctx.opts.pred.empty()) return {read_file(ctx.opts.pred), ctx.opts.pred};
  return ctx.io.input();
}

int emit_report(Context& ctx, Report report) {
  if (!ctx.opts.title.empty()) report.title = ctx.opts.title;
  if (ctx.io.table()) {
    ctx.io.out() << render_report_table(report);
  } else {
    ctx.io.out() << dump(report_to_json(report)) << '\n';
  }
  return kExitOk;
}

int cmd_score_tokens(Context& ctx) {
  const auto golds = load_gold_tokens(read_file(ctx.opts.gold), ctx.opts.gold);
  const auto [data, source] = predictions(ctx);
  const auto preds = load_token_predictions(data, source);
  NormalizeOptions norm;
  norm.drop_punct = !ctx.opts.keep_punct;
  norm.hashtag_lenient = !ctx.opts.strict_hashtags;
  norm.mention_lenient = ctx.opts.lenient_mentions;
  return emit_report(ctx, score_tokens(ctx.registry(), golds, preds, norm));
}

int cmd_score_pos(Context& ctx) {
  const auto golds = load_gold_pos(read_file(ctx.opts.gold), ctx.opts.gold);
  const auto [data, source] = predictions(ctx);
  return emit_report(ctx, score_pos(ctx.registry(), golds, load_pos_predictions(data, source)));
}

int cmd_score_sentiment(Context& ctx) {
  const auto examples = load_sentiment_suite(read_file(ctx.opts.gold), ctx.opts.gold);
  const auto [data, source] = predictions(ctx);
  return emit_report(ctx, score_sentiment(examples, load_sentiment_predictions(data, source)));
}

// --- annotators -------------------------------------------------------------

int cmd_pos_baseline(Context& ctx) {
  const Registry& reg = ctx.registry();
  std::optional<PosLexicon> owned;
  const PosLexicon* lexicon = &PosLexicon::bundled();
  if (ctx.opts.no_lexicon) {
    owned.emplace(CoarsePos::kNoun);
    lexicon = &*owned;
  } else if (!ctx.opts.lexicon.empty()) {
    owned = PosLexicon::load(read_file(ctx.opts.lexicon), ctx.opts.lexicon);
    lexicon = &*owned;
  }

  const auto records = ctx.records();
  if (!ctx.io.table()) ctx.io.out() << dump({{"tagset", std::string(to_string(Tagset::kPennTreebank))}}) << '\n';
  for (const auto& rec : records) {
    std::vector<std::string> tokens;
    if (rec.tokens) {
      tokens = *rec.tokens;
    } else {
      for (auto& t : tokenize(reg, rec.text)) tokens.push_back(std::move(t.text));
    }
    if (ctx.opts.retokenize) tokens = retokenize(reg, tokens);
    const auto tagged = tag_tokens(reg, *lexicon, tokens);
    if (ctx.io.table()) {
      std::string line = rec.id + "\t";
      for (std::size_t i = 0; i < tagged.size(); ++i) line += (i ? " " : "") + tagged[i].text + "/" + tagged[i].tag;
      ctx.io.out() << line << '\n';
      continue;
    }
    json arr = json::array();
    for (const auto& t : tagged) arr.push_back({{"text", t.text}, {"tag", t.tag}});
    ctx.io.out() << dump({{"id", rec.id}, {"tagged", std::move(arr)}}) << '\n';
  }
  return kExitOk;
}

int cmd_sentiment(Context& ctx) {
  if (ctx.opts.w_text < 0 || ctx.opts.w_emoji < 0) throw CLI::ValidationError("weights must be non-negative");
  const Registry& reg = ctx.registry();
  std::optional<SentimentLexicon> owned_lexicon;
  if (!ctx.opts.lexicon.empty()) owned_lexicon = SentimentLexicon::load(read_file(ctx.opts.lexicon), ctx.opts.lexicon);
  const SentimentLexicon& lexicon = owned_lexicon ? *owned_lexicon : SentimentLexicon::bundled();
  std::optional<WordValenceScorer> owned_scorer;
  if (!ctx.opts.text_lexicon.empty()) {
    owned_scorer = WordValenceScorer::load(read_file(ctx.opts.text_lexicon), ctx.opts.text_lexicon);
  }
  const WordValenceScorer& scorer = owned_scorer ? *owned_scorer : WordValenceScorer::bundled();

  SentimentOptions options;
  options.text_weight = ctx.opts.w_text;
  options.emoji_weight = ctx.opts.w_emoji;
  options.threshold = ctx.opts.sentiment_threshold;
  const TextScorer text_scorer = [&scorer](std::span<const Token> tokens) { return scorer(tokens); };

  for (const auto& rec : ctx.records()) {
    const SentimentResult r = analyze(reg, lexicon, rec.text, options, text_scorer);
    if (ctx.io.table()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%+.3f", r.combined_score);
      ctx.io.out() << rec.id << '\t' << to_string(r.polarity) << '\t' << buf << '\t' << rec.text << '\n';
      continue;
    }
    ctx.io.out() << dump({{"id", rec.id},
                          {"text_score", r.text_score},
                          {"emoji_score", r.emoji_score},
                          {"combined_score", r.combined_score},
                          {"polarity", std::string(to_string(r.polarity))},
                          {"emoji_count", r.emoji_count}})
                 << '\n';
  }
  return kExitOk;
}

int cmd_matrix(Context& ctx) {
  std::map<std::string, Report> reports;
  for (const auto& spec : ctx.opts.reports) {
    const auto eq = spec.find('=');
    const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    std::string name = eq == std::string::npos ? std::filesystem::path(path).stem().string() : spec.substr(0, eq);
    json value;
    try {
      value = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
      throw ParseError(path, 1, e.what());
    }
    if (!reports.emplace(name, report_from_json(value)).second) throw Error("duplicate tool name '" + name + "'");
  }
  const SupportMatrix matrix = render_support_matrix(reports, ctx.opts.matrix_threshold);
  if (ctx.io.table()) {
    ctx.io.out() << render_matrix_table(matrix);
  } else {
    ctx.io.out() << dump(matrix_to_json(matrix)) << '\n';
  }
  return kExitOk;
}

int cmd_neighbors(Context& ctx) {
  const Registry& reg = ctx.registry();
  const EmbeddingTable table = EmbeddingTable::load(read_file(ctx.opts.embeddings), ctx.opts.embeddings);
  const auto filter = ctx.opts.emoji_only ? NeighborFilter::kEmojiOnly : NeighborFilter::kAll;
  const auto neighbors = nearest(table, reg, ctx.opts.token, ctx.opts.k, filter);

  std::optional<double> consistency;
  try {
    consistency = skin_tone_consistency(table, reg, ctx.opts.token, ctx.opts.k);
  } catch (const NotTonedError&) {
  }

  if (ctx.io.table()) {
    std::size_t rank = 0;
    for (const auto& n : neighbors) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", n.cosine);
      ctx.io.out() << ++rank << '\t' << n.token << '\t' << buf << '\n';
    }
    if (consistency) ctx.io.out() << "skin tone consistency@" << ctx.opts.k << ": " << *consistency << '\n';
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& n : neighbors) arr.push_back({{"token", n.token}, {"cosine", n.cosine}});
  json out = {{"token", ctx.opts.token}, {"k", ctx.opts.k}, {"neighbors", std::move(arr)}};
  if (consistency) out["skin_tone_consistency"] = *consistency;
  ctx.io.out() << dump(out) << '\n';
  return kExitOk;
}

// --- wiring -----------------------------------------------------------------

using Handler = int (*)(Context&);

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description, Options& opts,
                      bool reads_input = true) {
  CLI::App* sub = app.add_subcommand(name, description);
  if (reads_input) sub->add_option("--in", opts.in, "Input file (default: standard input)");
  sub->add_option("--out", opts.out, "Output file (default: standard output)");
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  sub->add_option("--registry", opts.registry,
                  "Code point registry file (default: $EMOJISEG_REGISTRY, then the bundled snapshot)");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Emoji-aware tokenization, analysis and conformance scoring for tweets", "emojiseg"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::vector<std::pair<CLI::App*, Handler>> commands;

  commands.emplace_back(add_command(app, "tokenize", "Split JSONL {id, text} records into tokens", opts),
                        cmd_tokenize);
  commands.emplace_back(add_command(app, "segment", "List the emoji sequences of each record", opts), cmd_segment);
  commands.emplace_back(add_command(app, "classify", "Label each record with emoji-use cases", opts), cmd_classify);
  commands.emplace_back(add_command(app, "stats", "Corpus statistics over a stream of records", opts), cmd_stats);

  auto add_scorer = [&](const std::string& name, const std::string& description, Handler handler) {
    CLI::App* sub = add_command(app, name, description, opts);
    sub->add_option("--gold", opts.gold, "Gold suite (JSONL)")->required();
    sub->add_option("--pred", opts.pred, "Predictions (JSONL, default: --in or standard input)");
    sub->add_option("--title", opts.title, "Report title");
    commands.emplace_back(sub, handler);
    return sub;
  };
  CLI::App* score_tokens_cmd = add_scorer("score-tokens", "Score tokenizer output against a gold suite", cmd_score_tokens);
  score_tokens_cmd->add_flag("--keep-punct", opts.keep_punct, "Compare punctuation tokens too");
  score_tokens_cmd->add_flag("--strict-hashtags", opts.strict_hashtags, "Require '#' to match on hashtags");
  score_tokens_cmd->add_flag("--lenient-mentions", opts.lenient_mentions, "Let '@x' match 'x'");
  add_scorer("score-pos", "Score emoji part-of-speech tags against a gold suite", cmd_score_pos);
  add_scorer("score-sentiment", "Score polarity predictions against a sentiment suite", cmd_score_sentiment);

  CLI::App* pos = add_command(app, "pos-baseline", "Tag tokens with the heuristic emoji POS baseline", opts);
  pos->add_flag("--retokenize", opts.retokenize, "Split tokens that mix emojis and text before tagging");
  pos->add_flag("--no-lexicon", opts.no_lexicon, "Tag every emoji as a noun");
  pos->add_option("--lexicon", opts.lexicon, "Emoji POS lexicon (TSV emoji<TAB>CLASS)")->excludes("--no-lexicon");
  commands.emplace_back(pos, cmd_pos_baseline);

  CLI::App* senti = add_command(app, "sentiment", "Text plus emoji polarity for each record", opts);
  senti->add_option("--w-text", opts.w_text, "Weight of the text score")->capture_default_str();
  senti->add_option("--w-emoji", opts.w_emoji, "Weight of the emoji score")->capture_default_str();
  senti->add_option("--threshold", opts.sentiment_threshold, "Polarity threshold")->capture_default_str();
  senti->add_option("--lexicon", opts.lexicon, "Emoji sentiment lexicon (TSV)");
  senti->add_option("--text-lexicon", opts.text_lexicon, "Word valence list (TSV)");
  commands.emplace_back(senti, cmd_sentiment);

  CLI::App* matrix = add_command(app, "matrix", "Support matrix over several JSON reports", opts, false);
  matrix->add_option("reports", opts.reports, "Reports as NAME=PATH or PATH")->required();
  matrix->add_option("--threshold", opts.matrix_threshold, "Minimum success percentage for support")
      ->capture_default_str();
  commands.emplace_back(matrix, cmd_matrix);

  CLI::App* nb = add_command(app, "neighbors", "Nearest neighbours in a word2vec text embedding", opts, false);
  nb->add_option("--embeddings", opts.embeddings, "Embedding file")->required();
  nb->add_option("--token", opts.token, "Query token")->required();
  nb->add_option("--k", opts.k, "Number of neighbours")->check(CLI::PositiveNumber)->capture_default_str();
  nb->add_flag("--emoji-only", opts.emoji_only, "Only report emoji neighbours");
  commands.emplace_back(nb, cmd_neighbors);

  if (!args.empty() && !args.front().starts_with("-")) {
    const bool known = std::any_of(commands.begin(), commands.end(),
                                   [&](const auto& c) { return c.first->get_name() == args.front(); });
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return kExitUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        Context ctx(opts, in, out);
        const int code = handler(ctx);
        ctx.io.out().flush();
        return code;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace emojiseg::cli

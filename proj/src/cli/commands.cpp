#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "opberg/bench.hpp"
#include "opberg/classifier.hpp"
#include "opberg/cli.hpp"
#include "opberg/corpus.hpp"
#include "opberg/error.hpp"
#include "opberg/naive.hpp"
#include "opberg/opberg.hpp"
#include "opberg/report.hpp"
#include "opberg/smith_waterman.hpp"

namespace opberg {

namespace {

struct Options {
  std::string mode = "opberg";
  std::string a;
  std::string b;
  Score match = 2;
  Score mismatch = -1;
  std::string matrix;
  Score gap = -1;
  Score gap_open = -2;
  Score gap_extend = -1;
  std::string jump_penalty = "-3";
  std::string alpha = "4";
  std::string beta = "3";
  std::string beta_mode = "absolute";
  std::string gamma = "shortfall";
  double delta = 0.0;
  std::string normalize = "by_shorter";
  std::string train;
  std::string input;
  std::string test;
  std::string emit = "json";
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  std::optional<std::size_t> k_max;
  bool strict = false;
  bool abstain_as_negative = true;
  std::string modes = "naive,opberg";
  std::string sizes = "64,128,256,512";
  std::size_t alphabet = 4;
};

// Checks run while parsing so bad values are usage errors (exit 2).
const CLI::Validator kScoreLiteral(
    [](std::string& v) -> std::string {
      try {
        parse_score_literal(v);
        return {};
      } catch (const Error& e) {
        return e.what();
      }
    },
    "INT|inf|-inf");

const CLI::Validator kGamma(
    [](std::string& v) -> std::string {
      try {
        GammaSpec::parse(v);
        return {};
      } catch (const Error& e) {
        return e.what();
      }
    },
    "zero|identity|shortfall|linear(c)");

void add_scoring(CLI::App* cmd, Options& o) {
  cmd->add_option("--match", o.match, "Uniform match score")->capture_default_str();
  cmd->add_option("--mismatch", o.mismatch, "Uniform mismatch score")->capture_default_str();
  cmd->add_option("--matrix", o.matrix, "Substitution matrix file (overrides --match/--mismatch)");
  cmd->add_option("--gap", o.gap, "Linear gap penalty Q (naive mode)")->capture_default_str();
  cmd->add_option("--gap-open", o.gap_open, "Affine gap open O")->capture_default_str();
  cmd->add_option("--gap-extend", o.gap_extend, "Affine gap extend E")->capture_default_str();
  cmd->add_option("--jump-penalty", o.jump_penalty, "Penalty P per additional alignment (<= 0)")
      ->check(kScoreLiteral)
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Break threshold alpha (>= 0)")
      ->check(kScoreLiteral)
      ->capture_default_str();
  cmd->add_option("--beta", o.beta, "Start threshold beta")->check(kScoreLiteral)->capture_default_str();
  cmd->add_option("--beta-mode", o.beta_mode, "Compare beta with the score or the score length")
      ->check(CLI::IsMember({"absolute", "relative"}))
      ->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "Weight of sub-threshold alignments")
      ->check(kGamma)
      ->capture_default_str();
  cmd->add_option("--k-max", o.k_max, "Largest segment count for naive mode");
  cmd->add_option("--emit", o.emit, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for generated data")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_classifier(CLI::App* cmd, Options& o) {
  cmd->add_option("--train", o.train, "Labeled training corpus")->required();
  cmd->add_option("--delta", o.delta, "Similarity threshold")->capture_default_str();
  cmd->add_option("--normalize", o.normalize, "Similarity normalization")
      ->check(CLI::IsMember({"none", "by_shorter", "by_longer"}))
      ->capture_default_str();
  cmd->add_flag("--strict", o.strict, "Fail on the first malformed corpus line");
  cmd->add_flag("--abstain-as-negative,!--no-abstain-as-negative", o.abstain_as_negative,
                "Report below-threshold positives as noncausal instead of abstain (default)");
}

Emit emit_of(const Options& o) { return o.emit == "tsv" ? Emit::tsv : Emit::json; }

OpbergParams params_of(const Options& o) {
  OpbergParams p;
  p.jump_penalty = parse_score_literal(o.jump_penalty);
  p.alpha = parse_score_literal(o.alpha);
  p.beta = parse_score_literal(o.beta);
  p.beta_mode = *parse_beta_mode(o.beta_mode);
  p.gamma = GammaSpec::parse(o.gamma);
  p.k_max = o.k_max;
  return normalized(p);
}

ScoringScheme scheme_of(const Options& o, Alphabet& alphabet) {
  if (!o.matrix.empty()) return read_matrix_file(o.matrix, alphabet);
  return ScoringScheme::uniform(o.match, o.mismatch);
}

GapModel gaps_of(const Options& o) { return {o.gap, o.gap_open, o.gap_extend}; }

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

std::vector<std::string> split_tags(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  for (std::string tag; std::getline(in, tag, ',');) {
    if (tag.empty()) throw ConfigError("empty tag in '" + text + "'");
    out.push_back(tag);
  }
  if (text.back() == ',') throw ConfigError("empty tag in '" + text + "'");
  return out;
}

int cmd_align(const Options& o, std::ostream& out, std::ostream& err) {
  Alphabet alphabet;
  const ScoringScheme scheme = scheme_of(o, alphabet);
  report_warnings(scheme.warnings(), err);
  report_warnings(gaps_of(o).warnings(), err);
  const OpbergParams params = params_of(o);

  TokenSeq a, b;
  if (!o.input.empty()) {
    const auto corpus = read_corpus(o.input, o.strict);
    report_warnings(corpus.warnings, err);
    auto find = [&](const std::string& id) {
      for (const auto& r : corpus.records) {
        if (r.id == id) return to_token_seq(r, alphabet);
      }
      throw ConfigError("no record with id '" + id + "' in " + o.input);
    };
    a = find(o.a);
    b = find(o.b);
  } else {
    a = intern(split_tags(o.a), alphabet);
    b = intern(split_tags(o.b), alphabet);
  }

  AlignmentResult result;
  if (o.mode == "sw") {
    result = smith_waterman(a, b, scheme, gaps_of(o));
  } else if (o.mode == "naive") {
    result = naive_optimal(a, b, scheme, o.gap, params.jump_penalty,
                           effective_k_max(a, b, params.k_max));
  } else {
    result = opberg_align(a, b, scheme, gaps_of(o), params);
  }
  out << format_alignment(result, emit_of(o));
  return 0;
}

struct Inputs {
  Alphabet alphabet;
  ScoringScheme scheme;
  LabeledCorpus train;
  std::vector<SentenceRecord> records;
  std::vector<TokenSeq> seqs;
};

Inputs load_inputs(const Options& o, const std::string& path, std::ostream& err) {
  Inputs in;
  in.scheme = scheme_of(o, in.alphabet);
  const auto train = read_corpus(o.train, o.strict);
  report_warnings(train.warnings, err);
  in.train = to_labeled_corpus(train.records, in.alphabet);
  validate(in.train);
  auto input = read_corpus(path, o.strict);
  report_warnings(input.warnings, err);
  in.records = std::move(input.records);
  for (const auto& r : in.records) in.seqs.push_back(to_token_seq(r, in.alphabet));
  return in;
}

ClassifierParams classifier_params(const Options& o, const ScoringScheme& scheme) {
  ClassifierParams p;
  p.delta_c = o.delta;
  p.scheme = scheme;
  p.gaps = gaps_of(o);
  p.align = params_of(o);
  p.normalization = *parse_normalization(o.normalize);
  p.abstain_as_negative = o.abstain_as_negative;
  return p;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input.empty()) throw CLI::RequiredError("--input");
  const Inputs in = load_inputs(o, o.input, err);
  const ClassifierParams params = classifier_params(o, in.scheme);
  const auto decisions = classify_all(in.seqs, in.train, params, o.threads);
  if (emit_of(o) == Emit::tsv) out << decision_tsv_header();
  for (std::size_t r = 0; r < decisions.size(); ++r) {
    out << format_decision(in.records[r].id, decisions[r], emit_of(o));
  }
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.test.empty()) throw CLI::RequiredError("--test");
  const Inputs in = load_inputs(o, o.test, err);
  if (in.records.empty()) throw ConfigError("test corpus is empty");
  std::vector<bool> gold;
  for (const auto& r : in.records) {
    if (r.label == RecordLabel::unlabeled) {
      throw ConfigError("test record '" + r.id + "' has no label");
    }
    gold.push_back(r.label == RecordLabel::causal);
  }
  const auto result = evaluate(in.seqs, gold, in.train, classifier_params(o, in.scheme), o.threads);
  out << format_metrics(result.metrics, emit_of(o));
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  Alphabet alphabet;
  config.scheme = scheme_of(o, alphabet);
  config.gaps = gaps_of(o);
  config.params = params_of(o);
  config.seed = o.seed;
  config.alphabet = config.scheme.is_uniform() ? o.alphabet : config.scheme.matrix_size();
  report_warnings(config.scheme.warnings(), err);

  std::vector<Mode> modes;
  for (const auto& m : split_tags(o.modes)) {
    const auto mode = parse_mode(m);
    if (!mode) throw ConfigError("unknown mode '" + m + "'");
    modes.push_back(*mode);
  }
  std::vector<std::size_t> sizes;
  for (const auto& s : split_tags(o.sizes)) {
    std::size_t pos = 0;
    const auto n = std::stoul(s, &pos);
    if (pos != s.size() || n == 0) throw ConfigError("bad size '" + s + "'");
    sizes.push_back(n);
  }

  out << bench_csv_header();
  for (const Mode mode : modes) {
    for (const std::size_t n : sizes) out << format_bench_row(bench_one(mode, n, config)) << std::flush;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal multi-segment alignment of POS tag sequences"};
  app.name("opberg");
  app.require_subcommand(1, 1);

  auto* align = app.add_subcommand("align", "Align two tag sequences");
  align->add_option("--mode", o.mode, "Aligner")
      ->check(CLI::IsMember({"sw", "naive", "opberg"}))
      ->capture_default_str();
  align->add_option("--a", o.a, "First sequence (comma-separated tags, or a record id with --input)");
  align->add_option("--b", o.b, "Second sequence");
  align->add_option("--input", o.input, "Corpus to look up --a/--b as record ids");
  align->add_flag("--strict", o.strict, "Fail on the first malformed corpus line");
  add_scoring(align, o);

  auto* classify = app.add_subcommand("classify", "Label sentences as causal or noncausal");
  classify->add_option("--input", o.input, "Sentences to classify")->required();
  add_classifier(classify, o);
  add_scoring(classify, o);

  auto* eval = app.add_subcommand("eval", "Precision, recall, F1 and accuracy on a labeled test set");
  eval->add_option("--test", o.test, "Labeled test corpus")->required();
  add_classifier(eval, o);
  add_scoring(eval, o);

  auto* bench = app.add_subcommand("bench", "Time alignments of seeded random sequences (CSV)");
  bench->add_option("--modes", o.modes, "Comma-separated aligners")->capture_default_str();
  bench->add_option("--sizes", o.sizes, "Comma-separated sequence lengths")->capture_default_str();
  bench->add_option("--alphabet", o.alphabet, "Alphabet size for uniform scoring")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_scoring(bench, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    if (align->parsed()) return cmd_align(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (eval->parsed()) return cmd_eval(o, out, err);
    return cmd_bench(o, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace opberg

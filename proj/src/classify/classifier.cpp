#include "opberg/classifier.hpp"

#include <algorithm>
#include <unordered_set>

#include "opberg/error.hpp"
#include "opberg/kernels.hpp"
#include "opberg/opberg.hpp"
#include "opberg/parallel.hpp"

namespace opberg {

namespace {

std::string id_of(const TokenSeq& seq) { return seq.source_id.value_or(""); }

// Highest similarity, ties to the lexicographically smallest source id.
Match best_match(const TokenSeq& s, const std::vector<TokenSeq>& pool,
                 const ClassifierParams& params) {
  Match best;
  bool seen = false;
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    const double sim = similarity(s, pool[idx], params);
    std::string id = id_of(pool[idx]);
    if (!seen || sim > best.similarity || (sim == best.similarity && id < best.source_id)) {
      best = {std::move(id), sim, idx};
      seen = true;
    }
  }
  return best;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void validate(const LabeledCorpus& corpus) {
  if (corpus.positives.empty()) throw ConfigError("training corpus has no causal sentences");
  if (corpus.negatives.empty()) throw ConfigError("training corpus has no non-causal sentences");
  std::unordered_set<std::string> ids;
  for (const auto& s : corpus.positives) {
    if (s.source_id) ids.insert(*s.source_id);
  }
  for (const auto& s : corpus.negatives) {
    if (s.source_id && ids.count(*s.source_id)) {
      throw ConfigError("sentence '" + *s.source_id + "' is labeled both causal and non-causal");
    }
  }
}

std::optional<Normalization> parse_normalization(std::string_view text) {
  if (text == "none") return Normalization::none;
  if (text == "by_shorter") return Normalization::by_shorter;
  if (text == "by_longer") return Normalization::by_longer;
  return std::nullopt;
}

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::none:
      return "none";
    case Normalization::by_shorter:
      return "by_shorter";
    case Normalization::by_longer:
      return "by_longer";
  }
  return "?";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::causal:
      return "causal";
    case Label::non_causal:
      return "noncausal";
    case Label::abstain:
      return "abstain";
  }
  return "?";
}

double similarity(const TokenSeq& s, const TokenSeq& c, const ClassifierParams& params) {
  if (s.empty() || c.empty()) return 0.0;
  ScoreProblem problem{s.ids, c.ids, &params.scheme, params.gaps, params.align};
  const double raw = opberg_score(problem);
  switch (params.normalization) {
    case Normalization::none:
      return raw;
    case Normalization::by_shorter:
      return raw / static_cast<double>(std::min(s.size(), c.size()));
    case Normalization::by_longer:
      return raw / static_cast<double>(std::max(s.size(), c.size()));
  }
  return raw;
}

Label decide(double best_positive, double best_negative, const ClassifierParams& params) {
  if (best_positive > best_negative && best_positive > params.delta_c) return Label::causal;
  if (best_positive > best_negative && !params.abstain_as_negative) return Label::abstain;
  return Label::non_causal;
}

Decision classify(const TokenSeq& s, const LabeledCorpus& corpus, const ClassifierParams& params) {
  validate(corpus);
  Decision d;
  d.best_positive = best_match(s, corpus.positives, params);
  d.best_negative = best_match(s, corpus.negatives, params);
  d.label = decide(d.best_positive.similarity, d.best_negative.similarity, params);
  const TokenSeq& winner = d.best_positive.similarity > d.best_negative.similarity
                               ? corpus.positives[d.best_positive.index]
                               : corpus.negatives[d.best_negative.index];
  d.evidence = opberg_align(s, winner, params.scheme, params.gaps, params.align);
  return d;
}

std::vector<Decision> classify_all(const std::vector<TokenSeq>& inputs,
                                   const LabeledCorpus& corpus, const ClassifierParams& params,
                                   std::size_t threads) {
  validate(corpus);
  return parallel_map<Decision>(inputs.size(), threads, [&](std::size_t i) {
    return classify(inputs[i], corpus, params);
  });
}

double Metrics::precision() const noexcept {
  return ratio(true_positive, true_positive + false_positive);
}

double Metrics::recall() const noexcept {
  return ratio(true_positive, true_positive + false_negative);
}

double Metrics::f1() const noexcept {
  const double p = precision();
  const double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

double Metrics::accuracy() const noexcept {
  return ratio(true_positive + true_negative, total());
}

Metrics score_decisions(const std::vector<Decision>& decisions, const std::vector<bool>& gold) {
  if (decisions.size() != gold.size()) throw ConfigError("decision and label counts differ");
  Metrics m;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const bool predicted = decisions[i].label == Label::causal;
    if (decisions[i].label == Label::abstain) ++m.abstained;
    if (predicted && gold[i]) ++m.true_positive;
    if (predicted && !gold[i]) ++m.false_positive;
    if (!predicted && gold[i]) ++m.false_negative;
    if (!predicted && !gold[i]) ++m.true_negative;
  }
  return m;
}

Evaluation evaluate(const std::vector<TokenSeq>& test, const std::vector<bool>& gold,
                    const LabeledCorpus& train, const ClassifierParams& params,
                    std::size_t threads) {
  Evaluation e;
  e.decisions = classify_all(test, train, params, threads);
  e.metrics = score_decisions(e.decisions, gold);
  return e;
}

}  // namespace opberg

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

struct LabeledCorpus {
  std::vector<TokenSeq> positives;  // causal
  std::vector<TokenSeq> negatives;  // non-causal
};

/// Throws ConfigError if a class is empty or a source id appears in both.
void validate(const LabeledCorpus& corpus);

enum class Normalization { none, by_shorter, by_longer };

std::optional<Normalization> parse_normalization(std::string_view text);
std::string_view to_string(Normalization n);

struct ClassifierParams {
  double delta_c = 0.0;
  ScoringScheme scheme;
  GapModel gaps;
  OpbergParams align;
  Normalization normalization = Normalization::by_shorter;
  /// Report "below threshold but closer to a positive" as non_causal.
  bool abstain_as_negative = true;
};

enum class Label { causal, non_causal, abstain };

std::string_view to_string(Label label);

struct Match {
  std::string source_id;
  double similarity = 0.0;
  /// Index into the positives or negatives list.
  std::size_t index = 0;
};

struct Decision {
  Label label = Label::non_causal;
  Match best_positive;
  Match best_negative;
  /// Alignment against the closer of the two best matches (the negative on ties).
  AlignmentResult evidence;
};

/// OpBerg objective of (s, c), divided by the length chosen by the
/// normalization. Empty sequences have similarity 0.
double similarity(const TokenSeq& s, const TokenSeq& c, const ClassifierParams& params);

/// The decision rule on two best similarities.
Label decide(double best_positive, double best_negative, const ClassifierParams& params);

Decision classify(const TokenSeq& s, const LabeledCorpus& corpus, const ClassifierParams& params);

/// classify over many inputs; output order follows `inputs` for any thread count.
std::vector<Decision> classify_all(const std::vector<TokenSeq>& inputs,
                                   const LabeledCorpus& corpus, const ClassifierParams& params,
                                   std::size_t threads);

struct Metrics {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t true_negative = 0;
  std::size_t false_negative = 0;
  /// Abstentions (only when not collapsed); counted as negatives above.
  std::size_t abstained = 0;

  std::size_t total() const noexcept {
    return true_positive + false_positive + true_negative + false_negative;
  }
  double precision() const noexcept;
  double recall() const noexcept;
  double f1() const noexcept;
  double accuracy() const noexcept;
};

/// Confusion counts of `decisions` against gold labels (true = causal).
Metrics score_decisions(const std::vector<Decision>& decisions, const std::vector<bool>& gold);

struct Evaluation {
  std::vector<Decision> decisions;
  Metrics metrics;
};

Evaluation evaluate(const std::vector<TokenSeq>& test, const std::vector<bool>& gold,
                    const LabeledCorpus& train, const ClassifierParams& params,
                    std::size_t threads);

}  // namespace opberg

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "opberg/classifier.hpp"
#include "opberg/types.hpp"

namespace opberg {

enum class RecordLabel { causal, noncausal, unlabeled };

struct SentenceRecord {
  std::string id;
  RecordLabel label = RecordLabel::unlabeled;
  std::optional<std::vector<std::string>> tokens;
  std::vector<std::string> pos;
  /// Fields other than id/label/tokens/pos, kept in file order.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

struct CorpusReadResult {
  std::vector<SentenceRecord> records;
  /// "line N: reason" for every skipped line (non-strict mode).
  std::vector<std::string> warnings;
};

/// Parses one record. Throws ParseError(line) on malformed input.
SentenceRecord parse_record(const std::string& line, std::size_t line_no);

/// One JSON object per line; blank lines are ignored. In strict mode the
/// first bad line throws ParseError, otherwise it is skipped with a warning.
CorpusReadResult read_corpus(std::istream& in, bool strict);
CorpusReadResult read_corpus(const std::string& path, bool strict);

std::string format_record(const SentenceRecord& record);
void write_corpus(std::ostream& out, const std::vector<SentenceRecord>& records);

TokenSeq to_token_seq(const SentenceRecord& record, Alphabet& alphabet);

/// Splits labeled records into the two training classes; unlabeled ones are ignored.
LabeledCorpus to_labeled_corpus(const std::vector<SentenceRecord>& records, Alphabet& alphabet);

/// Word -> tag lookup with ASCII case folding and a fallback tag.
class Lexicon {
 public:
  explicit Lexicon(std::string default_tag = "NN") : default_tag_(std::move(default_tag)) {}

  void add(const std::string& word, std::string tag);
  const std::string& tag(const std::string& word) const;
  const std::string& default_tag() const noexcept { return default_tag_; }

 private:
  std::unordered_map<std::string, std::string> entries_;
  std::string default_tag_;
};

std::vector<std::string> lexicon_tag(const std::vector<std::string>& tokens, const Lexicon& lex);

}  // namespace opberg

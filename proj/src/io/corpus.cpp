#include "opberg/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "opberg/error.hpp"

namespace opberg {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> string_list(const json& value, std::size_t line_no, const char* field) {
  if (!value.is_array()) throw ParseError(line_no, std::string("'") + field + "' must be a list");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ParseError(line_no, std::string("'") + field + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string fold(const std::string& word) {
  std::string out = word;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

SentenceRecord parse_record(const std::string& line, std::size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(line_no, "record must be an object");

  SentenceRecord rec;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    const json& value = it.value();
    if (key == "id") {
      if (!value.is_string()) throw ParseError(line_no, "'id' must be a string");
      rec.id = value.get<std::string>();
    } else if (key == "label") {
      if (value == "causal") {
        rec.label = RecordLabel::causal;
      } else if (value == "noncausal") {
        rec.label = RecordLabel::noncausal;
      } else if (!value.is_null()) {
        throw ParseError(line_no, "'label' must be \"causal\" or \"noncausal\"");
      }
    } else if (key == "tokens") {
      rec.tokens = string_list(value, line_no, "tokens");
    } else if (key == "pos") {
      rec.pos = string_list(value, line_no, "pos");
    } else {
      rec.extra[key] = value;
    }
  }
  if (!obj.contains("id")) throw ParseError(line_no, "missing 'id'");
  if (!obj.contains("pos")) throw ParseError(line_no, "missing 'pos'");
  if (rec.pos.empty()) throw ParseError(line_no, "'pos' is empty");
  if (rec.tokens && rec.tokens->size() != rec.pos.size()) {
    throw ParseError(line_no, "'tokens' has " + std::to_string(rec.tokens->size()) +
                                  " entries but 'pos' has " + std::to_string(rec.pos.size()));
  }
  return rec;
}

CorpusReadResult read_corpus(std::istream& in, bool strict) {
  CorpusReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      result.records.push_back(parse_record(line, line_no));
    } catch (const ParseError& e) {
      if (strict) throw;
      result.warnings.push_back(e.what());
    }
  }
  return result;
}

CorpusReadResult read_corpus(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file: " + path);
  return read_corpus(in, strict);
}

std::string format_record(const SentenceRecord& record) {
  json obj = json::object();
  obj["id"] = record.id;
  if (record.label != RecordLabel::unlabeled) {
    obj["label"] = record.label == RecordLabel::causal ? "causal" : "noncausal";
  }
  if (record.tokens) obj["tokens"] = *record.tokens;
  obj["pos"] = record.pos;
  for (auto it = record.extra.begin(); it != record.extra.end(); ++it) obj[it.key()] = it.value();
  return obj.dump();
}

void write_corpus(std::ostream& out, const std::vector<SentenceRecord>& records) {
  for (const auto& r : records) out << format_record(r) << '\n';
}

TokenSeq to_token_seq(const SentenceRecord& record, Alphabet& alphabet) {
  TokenSeq seq = intern(record.pos, alphabet);
  seq.source_id = record.id;
  return seq;
}

LabeledCorpus to_labeled_corpus(const std::vector<SentenceRecord>& records, Alphabet& alphabet) {
  LabeledCorpus corpus;
  for (const auto& r : records) {
    if (r.label == RecordLabel::causal) corpus.positives.push_back(to_token_seq(r, alphabet));
    if (r.label == RecordLabel::noncausal) corpus.negatives.push_back(to_token_seq(r, alphabet));
  }
  return corpus;
}

void Lexicon::add(const std::string& word, std::string tag) { entries_[fold(word)] = std::move(tag); }

const std::string& Lexicon::tag(const std::string& word) const {
  const auto it = entries_.find(fold(word));
  return it == entries_.end() ? default_tag_ : it->second;
}

std::vector<std::string> lexicon_tag(const std::vector<std::string>& tokens, const Lexicon& lex) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(lex.tag(t));
  return out;
}

}  // namespace opberg

#include "opberg/scoring.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "opberg/error.hpp"

namespace opberg {

ScoringScheme ScoringScheme::uniform(Score match, Score mismatch) {
  ScoringScheme s;
  s.uniform_ = true;
  s.match_ = match;
  s.mismatch_ = mismatch;
  return s;
}

ScoringScheme ScoringScheme::matrix(std::size_t size, std::vector<Score> table) {
  if (table.size() != size * size) {
    throw ConfigError("scoring matrix has " + std::to_string(table.size()) +
                      " entries, expected " + std::to_string(size * size));
  }
  ScoringScheme s;
  s.uniform_ = false;
  s.size_ = size;
  s.table_ = std::move(table);
  return s;
}

Score ScoringScheme::score(TokenId a, TokenId b) const {
  if (!uniform_ && (a >= size_ || b >= size_)) {
    throw AlphabetMismatchError("token id outside the " + std::to_string(size_) +
                                "-symbol scoring matrix");
  }
  return score_unchecked(a, b);
}

void ScoringScheme::check_tokens(std::span<const TokenId> ids) const {
  if (uniform_) return;
  for (TokenId id : ids) {
    if (id >= size_) {
      throw AlphabetMismatchError("token id " + std::to_string(id) +
                                  " outside the " + std::to_string(size_) +
                                  "-symbol scoring matrix");
    }
  }
}

Score ScoringScheme::max_abs() const noexcept {
  if (uniform_) return std::max(std::abs(match_), std::abs(mismatch_));
  Score best = 0;
  for (Score v : table_) best = std::max(best, std::abs(v));
  return best;
}

bool ScoringScheme::is_symmetric() const noexcept {
  if (uniform_) return true;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if (table_[i * size_ + j] != table_[j * size_ + i]) return false;
    }
  }
  return true;
}

std::vector<std::string> ScoringScheme::warnings() const {
  std::vector<std::string> out;
  if (uniform_) {
    if (match_ <= 0) out.push_back("match score should be positive");
    if (mismatch_ > 0) out.push_back("mismatch score should be non-positive");
  }
  return out;
}

Score score(const ScoringScheme& scheme, const PosToken& a, const PosToken& b) {
  return scheme.score(a.id, b.id);
}

std::vector<std::string> GapModel::warnings() const {
  std::vector<std::string> out;
  if (linear > 0) out.push_back("linear gap penalty should be non-positive");
  if (open > 0) out.push_back("gap-open penalty should be non-positive");
  if (extend > 0) out.push_back("gap-extend penalty should be non-positive");
  return out;
}

Score check_score_range(std::size_t len_a, std::size_t len_b,
                        const ScoringScheme& scheme, Score open, Score extend,
                        Score jump_penalty) {
  // Parameters at the inf literal are not reachable scores.
  auto finite = [](Score v) -> std::int64_t {
    return (v <= kNegInf || v >= kScoreInf) ? 0 : std::abs(static_cast<std::int64_t>(v));
  };
  const std::int64_t step = scheme.max_abs() + finite(open) + finite(extend) +
                            finite(jump_penalty) + 1;
  const std::int64_t bound = static_cast<std::int64_t>(len_a + len_b + 2) * step;
  constexpr std::int64_t kLimit = std::int64_t{1} << 28;
  if (bound > kLimit) {
    throw ConfigError("score range " + std::to_string(bound) +
                      " exceeds the 32-bit DP limit " + std::to_string(kLimit));
  }
  return static_cast<Score>(bound);
}

ScoringScheme parse_matrix(const std::string& text, Alphabet& alphabet) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<Score> table;
  std::size_t row = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    if (header.empty()) {
      header.push_back(first);
      for (std::string tag; fields >> tag;) header.push_back(tag);
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (alphabet.intern(header[i]) != i) {
          throw ParseError(line_no, "matrix header tag '" + header[i] +
                                        "' conflicts with the existing alphabet");
        }
      }
      continue;
    }
    if (row >= header.size()) throw ParseError(line_no, "too many matrix rows");
    if (first != header[row]) {
      throw ParseError(line_no, "row tag '" + first + "' does not match header '" +
                                    header[row] + "'");
    }
    std::size_t count = 0;
    for (std::string v; fields >> v; ++count) {
      char* end = nullptr;
      const long value = std::strtol(v.c_str(), &end, 10);
      if (*end != '\0') throw ParseError(line_no, "bad matrix value '" + v + "'");
      table.push_back(static_cast<Score>(value));
    }
    if (count != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " values");
    }
    ++row;
  }
  if (header.empty()) throw ParseError(line_no, "empty scoring matrix");
  if (row != header.size()) throw ParseError(line_no, "missing matrix rows");
  return ScoringScheme::matrix(header.size(), std::move(table));
}

ScoringScheme read_matrix_file(const std::string& path, Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), alphabet);
}

}  // namespace opberg

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace opberg {

/// All DP arithmetic is done in this type. Callers must stay within the
/// bound checked by `check_score_range` (see scoring.hpp).
using Score = std::int32_t;
using TokenId = std::uint32_t;

/// Magnitude used for the `inf` / `-inf` parameter literals and as the
/// unreachable-score sentinel.
inline constexpr Score kScoreInf = Score{1} << 30;
inline constexpr Score kNegInf = -kScoreInf;

struct PosToken {
  TokenId id = 0;
  std::string_view surface;
};

/// Bijection between tag strings and dense ids, grown by interning.
class Alphabet {
 public:
  TokenId intern(std::string_view tag);
  std::optional<TokenId> find(std::string_view tag) const;
  const std::string& surface(TokenId id) const;
  PosToken token(TokenId id) const { return {id, surface(id)}; }
  std::size_t size() const noexcept { return tags_.size(); }

 private:
  std::vector<std::string> tags_;
  std::unordered_map<std::string, TokenId> ids_;
};

struct TokenSeq {
  std::vector<TokenId> ids;
  std::optional<std::string> source_id;

  std::size_t size() const noexcept { return ids.size(); }
  bool empty() const noexcept { return ids.empty(); }
};

TokenSeq intern(const std::vector<std::string>& tags, Alphabet& alphabet);
std::vector<std::string> surfaces(const TokenSeq& seq, const Alphabet& alphabet);

/// Row-major dense matrix with (rows x cols) cells.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<T>& data() const noexcept { return data_; }
  std::size_t bytes() const noexcept { return data_.capacity() * sizeof(T); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct Cell {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One local alignment. Coordinates are 1-based and inclusive.
struct Segment {
  std::size_t a_start = 0;
  std::size_t a_end = 0;
  std::size_t b_start = 0;
  std::size_t b_end = 0;
  /// Contribution of this segment to the objective (after beta/gamma weighting).
  Score segment_score = 0;
  /// Raw alignment score of the segment: substitution scores plus gap costs.
  Score score_length = 0;
  /// Column operations: M (aligned pair), I (token of A only), D (token of B only).
  std::string cigar;

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Mode { sw, naive, opberg };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct AlignmentResult {
  /// sum(segment_score) + jump_penalty * (k - 1); 0 for the empty alignment.
  Score total_score = 0;
  std::vector<Segment> segments;
  /// For each pass through the max state: end of the previous segment, then
  /// start of the next one.
  std::vector<Cell> breakpoints;
  Mode mode = Mode::sw;

  std::size_t k() const noexcept { return segments.size(); }

  friend bool operator==(const AlignmentResult&, const AlignmentResult&) = default;
};

}  // namespace opberg

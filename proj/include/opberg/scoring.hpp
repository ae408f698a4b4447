#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "opberg/types.hpp"

namespace opberg {

/// Substitution function S(a, b): either match/mismatch or a full table.
class ScoringScheme {
 public:
  ScoringScheme() = default;

  static ScoringScheme uniform(Score match, Score mismatch);
  /// `table` is row-major, size x size.
  static ScoringScheme matrix(std::size_t size, std::vector<Score> table);

  bool is_uniform() const noexcept { return uniform_; }
  Score match_score() const noexcept { return match_; }
  Score mismatch_score() const noexcept { return mismatch_; }
  std::size_t matrix_size() const noexcept { return size_; }
  std::span<const Score> table() const noexcept { return table_; }

  /// Throws AlphabetMismatchError for ids outside a matrix scheme.
  Score score(TokenId a, TokenId b) const;

  Score score_unchecked(TokenId a, TokenId b) const noexcept {
    if (uniform_) return a == b ? match_ : mismatch_;
    return table_[a * size_ + b];
  }

  /// Throws AlphabetMismatchError if any id falls outside a matrix scheme.
  void check_tokens(std::span<const TokenId> ids) const;

  Score max_abs() const noexcept;
  bool is_symmetric() const noexcept;
  std::vector<std::string> warnings() const;

 private:
  bool uniform_ = true;
  Score match_ = 2;
  Score mismatch_ = -1;
  std::size_t size_ = 0;
  std::vector<Score> table_;
};

Score score(const ScoringScheme& scheme, const PosToken& a, const PosToken& b);

/// Gap penalties. `linear` is Q; the affine engines use `open` (O) and
/// `extend` (E), charging O + L*E for a run of L gap columns.
struct GapModel {
  Score linear = -1;
  Score open = -2;
  Score extend = -1;

  /// Linear gaps expressed in affine form: O = 0, E = Q.
  static GapModel linear_only(Score q) { return {q, 0, q}; }

  std::vector<std::string> warnings() const;
};

/// Largest magnitude a DP cell can reach for these inputs. Throws ConfigError
/// when it would not leave headroom for the sentinel in 32 bits.
Score check_score_range(std::size_t len_a, std::size_t len_b,
                        const ScoringScheme& scheme, Score open, Score extend,
                        Score jump_penalty);

/// Reads a whitespace table: a header row of tags, then one row per tag
/// ("TAG v v v ..."). Lines starting with '#' are ignored. Header tags are
/// interned into `alphabet` and must map to ids 0..n-1 in header order.
ScoringScheme read_matrix_file(const std::string& path, Alphabet& alphabet);
ScoringScheme parse_matrix(const std::string& text, Alphabet& alphabet);

}  // namespace opberg

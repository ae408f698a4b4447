#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

/// k-indexed tensors of the naive optimal-segmentation DP. Level k of `max`
/// holds the best score using at most k local alignments (k >= 1); level k
/// of `local` holds alignments that extend a level-k max cell.
class NaiveState {
 public:
  NaiveState() = default;
  NaiveState(std::size_t rows, std::size_t cols, std::size_t k_max);

  Score& local(std::size_t i, std::size_t j, std::size_t k) { return local_[index(i, j, k)]; }
  Score local(std::size_t i, std::size_t j, std::size_t k) const { return local_[index(i, j, k)]; }
  Score& max(std::size_t i, std::size_t j, std::size_t k) { return max_[index(i, j, k)]; }
  Score max(std::size_t i, std::size_t j, std::size_t k) const { return max_[index(i, j, k)]; }
  std::uint8_t& trace(std::size_t i, std::size_t j, std::size_t k) { return trace_[index(i, j, k)]; }
  std::uint8_t trace(std::size_t i, std::size_t j, std::size_t k) const { return trace_[index(i, j, k)]; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t k_max() const noexcept { return k_max_; }
  std::size_t bytes() const noexcept;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (k * rows_ + i) * cols_ + j;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t k_max_ = 0;
  std::vector<Score> local_;
  std::vector<Score> max_;
  std::vector<std::uint8_t> trace_;
};

/// Case tags stored in NaiveState::trace. Low 3 bits: source of `local`;
/// bits 3-4: source of `max`.
namespace naive_trace {
inline constexpr std::uint8_t kLocalUp = 0;      // L(i-1, j, k) + Q
inline constexpr std::uint8_t kLocalDiag = 1;    // L(i-1, j-1, k) + S
inline constexpr std::uint8_t kLocalLeft = 2;    // L(i, j-1, k) + Q
inline constexpr std::uint8_t kLocalJump = 3;    // M(i-1, j-1, k) + S
inline constexpr std::uint8_t kLocalZero = 4;    // 0
inline constexpr std::uint8_t kMaxUp = 0;        // M(i-1, j, k)
inline constexpr std::uint8_t kMaxLocal = 1;     // L(i, j, k-1), or L(i, j, 0) at k = 0
inline constexpr std::uint8_t kMaxLeft = 2;      // M(i, j-1, k)

inline std::uint8_t local_src(std::uint8_t t) { return t & 0x7; }
inline std::uint8_t max_src(std::uint8_t t) { return (t >> 3) & 0x3; }
}  // namespace naive_trace

/// Default k_max = max(|A|, |B|) (at least 1); larger requests are clamped.
std::size_t effective_k_max(const TokenSeq& a, const TokenSeq& b,
                            std::optional<std::size_t> requested);

NaiveState naive_fill(const TokenSeq& a, const TokenSeq& b,
                      const ScoringScheme& scheme, Score linear_gap,
                      std::size_t k_max);

/// max over k in 1..k_max of P*(k-1) + M(|A|,|B|,k), or the empty alignment
/// when nothing scores above 0. Ties prefer fewer alignments.
AlignmentResult naive_optimal(const TokenSeq& a, const TokenSeq& b,
                              const ScoringScheme& scheme, Score linear_gap,
                              Score jump_penalty, std::size_t k_max);

/// Objective and traceback over an already filled state.
AlignmentResult naive_result(const NaiveState& state, const TokenSeq& a, const TokenSeq& b,
                             const ScoringScheme& scheme, Score linear_gap,
                             Score jump_penalty);

}  // namespace opberg

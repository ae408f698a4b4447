#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

/// Node of a breakpoint chain. Chains are persistent singly linked lists
/// that share tails, so every cell can own one in O(1) space.
struct ChainNode {
  std::uint32_t i : 31;
  /// Set when the node marks a jump into an alignment, clear for an exit
  /// into the max state.
  std::uint32_t start : 1;
  std::uint32_t j;
  /// Index + 1 of the previous node; 0 terminates the chain.
  std::uint32_t parent;
};

/// Full DP state of one OpBerg alignment call.
struct DpState {
  Matrix<Score> ins;        // L_I
  Matrix<Score> match;      // L_G
  Matrix<Score> del;        // L_D
  Matrix<Score> max;        // M
  Matrix<Score> h_ins;      // H_I
  Matrix<Score> h_match;    // H_G
  Matrix<Score> h_del;      // H_D
  Matrix<std::uint32_t> chain_max;    // N, as chain handles (0 = empty)
  Matrix<std::uint32_t> chain_match;  // X, as chain handles (0 = empty)
  Matrix<std::uint16_t> trace;        // packed sources, see dp_step.hpp
  std::vector<ChainNode> nodes;

  // Inputs, kept for traceback and re-scoring.
  std::vector<TokenId> a;
  std::vector<TokenId> b;
  ScoringScheme scheme;
  GapModel gaps;
  OpbergParams params;

  std::size_t rows() const noexcept { return max.rows(); }
  std::size_t cols() const noexcept { return max.cols(); }
  /// Bytes held by all retained matrices and the chain arena.
  std::size_t bytes() const noexcept;
  /// Coordinates of the chain rooted at `handle`, oldest first.
  std::vector<ChainNode> chain(std::uint32_t handle) const;
};

DpState opberg_fill(const TokenSeq& a, const TokenSeq& b,
                    const ScoringScheme& scheme, const GapModel& gaps,
                    const OpbergParams& params);

/// Lexicographically smallest cell holding the maximum of M.
Cell objective_cell(const DpState& state);

/// Segments of the optimal path ending at `end_cell` (max state), in order.
std::vector<Segment> traceback(const DpState& state, Cell end_cell);

/// Objective, traceback and breakpoints over an already filled state.
AlignmentResult opberg_result(const DpState& state);

AlignmentResult opberg_align(const TokenSeq& a, const TokenSeq& b,
                             const ScoringScheme& scheme, const GapModel& gaps,
                             const OpbergParams& params);

}  // namespace opberg

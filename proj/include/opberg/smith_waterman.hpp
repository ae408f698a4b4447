#pragma once

#include <cstdint>

#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

/// Three-state local alignment matrices. `match(i,j)` is the best local
/// alignment ending with a_i aligned to b_j; `ins`/`del` end in a gap.
struct SwMatrices {
  Matrix<Score> match;
  Matrix<Score> ins;
  Matrix<Score> del;
  /// Packed predecessor states, see align/dp_step.hpp.
  Matrix<std::uint8_t> trace;
};

SwMatrices sw_fill(const TokenSeq& a, const TokenSeq& b,
                   const ScoringScheme& scheme, const GapModel& gaps);

/// Best single local alignment (k = 1). Ties: smallest (a_end, b_end), then
/// the case order of the recurrence (latest zero start).
AlignmentResult smith_waterman(const TokenSeq& a, const TokenSeq& b,
                               const ScoringScheme& scheme,
                               const GapModel& gaps);

/// m(i + d1, j + d2) - m(i, j). Throws IndexError when a cell is out of range.
Score score_length(const Matrix<Score>& m, std::ptrdiff_t i, std::ptrdiff_t j,
                   std::ptrdiff_t d1, std::ptrdiff_t d2);

}  // namespace opberg

#include "opberg/smith_waterman.hpp"

#include <algorithm>
#include <stdexcept>

#include "align/dp_step.hpp"
#include "align/segments.hpp"
#include "opberg/error.hpp"

namespace opberg {

namespace {

dp::Cell load(const SwMatrices& m, std::size_t i, std::size_t j) {
  dp::Cell c;
  c.ins = m.ins(i, j);
  c.match = m.match(i, j);
  c.del = m.del(i, j);
  return c;
}

}  // namespace

SwMatrices sw_fill(const TokenSeq& a, const TokenSeq& b, const ScoringScheme& scheme,
                   const GapModel& gaps) {
  scheme.check_tokens(a.ids);
  scheme.check_tokens(b.ids);
  check_score_range(a.size(), b.size(), scheme, gaps.open, gaps.extend, 0);

  const std::size_t rows = a.size() + 1;
  const std::size_t cols = b.size() + 1;
  SwMatrices m{Matrix<Score>(rows, cols, 0), Matrix<Score>(rows, cols, kNegInf),
               Matrix<Score>(rows, cols, kNegInf), Matrix<std::uint8_t>(rows, cols, 0)};
  OpbergParams unused;
  const auto k = dp::Constants::from(gaps, unused);

  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      dp::Trace tr;
      const dp::Cell out =
          dp::step_local(load(m, i - 1, j), load(m, i, j - 1), load(m, i - 1, j - 1),
                         scheme.score_unchecked(a.ids[i - 1], b.ids[j - 1]), k, tr);
      m.match(i, j) = out.match;
      m.ins(i, j) = out.ins;
      m.del(i, j) = out.del;
      m.trace(i, j) = static_cast<std::uint8_t>(tr.pack());
    }
  }
  return m;
}

AlignmentResult smith_waterman(const TokenSeq& a, const TokenSeq& b,
                               const ScoringScheme& scheme, const GapModel& gaps) {
  AlignmentResult result;
  result.mode = Mode::sw;
  const SwMatrices m = sw_fill(a, b, scheme, gaps);

  Score best = 0;
  Cell end;
  for (std::size_t i = 1; i < m.match.rows(); ++i) {
    for (std::size_t j = 1; j < m.match.cols(); ++j) {
      if (m.match(i, j) > best) {
        best = m.match(i, j);
        end = {i, j};
      }
    }
  }
  if (best <= 0) return result;

  std::string ops;
  std::size_t i = end.i;
  std::size_t j = end.j;
  std::uint8_t state = dp::kFromMatch;
  while (true) {
    const auto tr = dp::Trace::unpack(m.trace(i, j));
    if (state == dp::kFromMatch) {
      if (i == 0 || j == 0 || tr.match == dp::kZero) break;
      ops.push_back('M');
      state = static_cast<std::uint8_t>(tr.match - 1);
      --i;
      --j;
    } else if (state == dp::kFromIns) {
      ops.push_back('I');
      state = tr.ins;
      --i;
    } else {
      ops.push_back('D');
      state = tr.del;
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());

  Segment seg = detail::make_segment(end.i, end.j, std::move(ops));
  seg.score_length = detail::rescore(detail::expand_cigar(seg.cigar), seg.a_start,
                                     seg.b_start, a.ids, b.ids, scheme, gaps.open,
                                     gaps.extend);
  if (seg.score_length != best) {
    throw std::logic_error("smith_waterman: traceback does not reproduce the score");
  }
  seg.segment_score = best;
  result.total_score = best;
  result.segments.push_back(std::move(seg));
  return result;
}

Score score_length(const Matrix<Score>& m, std::ptrdiff_t i, std::ptrdiff_t j,
                   std::ptrdiff_t d1, std::ptrdiff_t d2) {
  auto in_range = [&](std::ptrdiff_t r, std::ptrdiff_t c) {
    return r >= 0 && c >= 0 && static_cast<std::size_t>(r) < m.rows() &&
           static_cast<std::size_t>(c) < m.cols();
  };
  if (!in_range(i, j) || !in_range(i + d1, j + d2)) {
    throw IndexError("score_length: cell outside the " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  }
  return m(static_cast<std::size_t>(i + d1), static_cast<std::size_t>(j + d2)) -
         m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

}  // namespace opberg

#include "opberg/naive.hpp"

#include <algorithm>
#include <stdexcept>

#include "align/segments.hpp"
#include "opberg/error.hpp"

namespace opberg {

namespace {

// Tensors beyond this would not fit the intended hosts.
constexpr std::size_t kMaxNaiveBytes = std::size_t{3} << 30;

using namespace naive_trace;

}  // namespace

NaiveState::NaiveState(std::size_t rows, std::size_t cols, std::size_t k_max)
    : rows_(rows), cols_(cols), k_max_(k_max) {
  const std::size_t cells = rows * cols * (k_max + 1);
  if (cells * (2 * sizeof(Score) + 1) > kMaxNaiveBytes) {
    throw ConfigError("naive tensors would need " +
                      std::to_string(cells * (2 * sizeof(Score) + 1)) +
                      " bytes; lower --k-max or use opberg mode");
  }
  local_.assign(cells, 0);
  max_.assign(cells, 0);
  trace_.assign(cells, 0);
}

std::size_t NaiveState::bytes() const noexcept {
  return local_.capacity() * sizeof(Score) + max_.capacity() * sizeof(Score) +
         trace_.capacity();
}

std::size_t effective_k_max(const TokenSeq& a, const TokenSeq& b,
                            std::optional<std::size_t> requested) {
  const std::size_t n = std::max<std::size_t>({a.size(), b.size(), 1});
  if (requested && *requested == 0) throw ConfigError("k-max must be >= 1");
  return requested ? std::min(*requested, n) : n;
}

NaiveState naive_fill(const TokenSeq& a, const TokenSeq& b, const ScoringScheme& scheme,
                      Score q, std::size_t k_max) {
  if (k_max == 0) throw ConfigError("k-max must be >= 1");
  scheme.check_tokens(a.ids);
  scheme.check_tokens(b.ids);
  check_score_range(a.size(), b.size(), scheme, 0, q, 0);

  const std::size_t rows = a.size() + 1;
  const std::size_t cols = b.size() + 1;
  NaiveState st(rows, cols, k_max);

  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t i = 1; i < rows; ++i) {
      for (std::size_t j = 1; j < cols; ++j) {
        const Score s = scheme.score_unchecked(a.ids[i - 1], b.ids[j - 1]);

        // L(i,j,k): cases in listed order, first maximum wins.
        Score best = st.local(i - 1, j, k) + q;
        std::uint8_t lsrc = kLocalUp;
        if (Score c = st.local(i - 1, j - 1, k) + s; c > best) best = c, lsrc = kLocalDiag;
        if (Score c = st.local(i, j - 1, k) + q; c > best) best = c, lsrc = kLocalLeft;
        if (k > 0) {
          if (Score c = st.max(i - 1, j - 1, k) + s; c > best) best = c, lsrc = kLocalJump;
        }
        if (0 > best) best = 0, lsrc = kLocalZero;
        st.local(i, j, k) = best;

        // M(i,j,k) draws on L at level k-1 (level 0 on itself).
        const Score from_local = st.local(i, j, k == 0 ? 0 : k - 1);
        Score mbest = st.max(i - 1, j, k);
        std::uint8_t msrc = kMaxUp;
        if (from_local > mbest) mbest = from_local, msrc = kMaxLocal;
        if (Score c = st.max(i, j - 1, k); c > mbest) mbest = c, msrc = kMaxLeft;
        st.max(i, j, k) = mbest;

        st.trace(i, j, k) = static_cast<std::uint8_t>(lsrc | (msrc << 3));
      }
    }
  }
  return st;
}

AlignmentResult naive_optimal(const TokenSeq& a, const TokenSeq& b,
                              const ScoringScheme& scheme, Score q, Score jump_penalty,
                              std::size_t k_max) {
  if (jump_penalty > 0) throw ConfigError("jump penalty must be <= 0");
  check_score_range(a.size(), b.size(), scheme, 0, q, jump_penalty);
  return naive_result(naive_fill(a, b, scheme, q, effective_k_max(a, b, k_max)), a, b, scheme, q, jump_penalty);
}

AlignmentResult naive_result(const NaiveState& st, const TokenSeq& a, const TokenSeq& b,
                             const ScoringScheme& scheme, Score q, Score jump_penalty) {
  if (jump_penalty > 0) throw ConfigError("jump penalty must be <= 0");
  const std::size_t k_max = st.k_max();
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  AlignmentResult result;
  result.mode = Mode::naive;

  Score best = 0;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::int64_t value = std::int64_t{jump_penalty} * static_cast<std::int64_t>(k - 1) +
                               st.max(n, m, k);
    if (value > best) best = static_cast<Score>(value), best_k = k;
  }
  if (best_k == 0) return result;

  // Walk the max state; each local run at level k-1 is one segment.
  std::vector<Segment> segments;
  std::size_t i = n;
  std::size_t j = m;
  std::size_t k = best_k;
  bool in_max = true;
  while (i > 0 && j > 0) {
    if (in_max) {
      const auto src = max_src(st.trace(i, j, k));
      if (src == kMaxUp) {
        --i;
      } else if (src == kMaxLeft) {
        --j;
      } else {
        if (k > 0) --k;
        in_max = false;
      }
      continue;
    }

    const std::size_t end_i = i;
    const std::size_t end_j = j;
    const Score end_value = st.local(i, j, k);
    std::string ops;
    Score base = 0;
    bool jumped = false;
    while (i > 0 && j > 0) {
      const auto src = local_src(st.trace(i, j, k));
      if (src == kLocalZero) break;
      if (src == kLocalUp) {
        ops.push_back('I');
        --i;
      } else if (src == kLocalLeft) {
        ops.push_back('D');
        --j;
      } else {
        ops.push_back('M');
        --i;
        --j;
        if (src == kLocalJump) {
          base = st.max(i, j, k);
          jumped = true;
          break;
        }
      }
    }
    std::reverse(ops.begin(), ops.end());
    if (!ops.empty()) {
      const Score raw = end_value - base;
      if (detail::rescore(ops, i + 1, j + 1, a.ids, b.ids, scheme, 0, q) != raw) {
        throw std::logic_error("naive_optimal: traceback does not reproduce the score");
      }
      Segment seg = detail::make_segment(end_i, end_j, std::move(ops));
      seg.score_length = detail::rescore(detail::expand_cigar(seg.cigar), seg.a_start,
                                         seg.b_start, a.ids, b.ids, scheme, 0, q);
      seg.segment_score = raw;
      segments.push_back(std::move(seg));
    }
    if (!jumped) break;
    in_max = true;
  }
  std::reverse(segments.begin(), segments.end());

  std::int64_t check = std::int64_t{jump_penalty} * static_cast<std::int64_t>(segments.size() - 1);
  for (const auto& seg : segments) check += seg.segment_score;
  if (segments.empty() || check != best) {
    throw std::logic_error("naive_optimal: segment scores do not sum to the objective");
  }

  result.total_score = best;
  result.segments = std::move(segments);
  result.breakpoints = detail::transit_breakpoints(result.segments);
  return result;
}

}  // namespace opberg

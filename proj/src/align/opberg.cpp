#include "opberg/opberg.hpp"

#include <algorithm>
#include <stdexcept>

#include "align/dp_step.hpp"
#include "align/segments.hpp"
#include "opberg/error.hpp"

namespace opberg {

namespace {

dp::Cell load(const DpState& st, std::size_t i, std::size_t j) {
  return {st.ins(i, j),   st.match(i, j),   st.del(i, j),  st.max(i, j),
          st.h_ins(i, j), st.h_match(i, j), st.h_del(i, j)};
}

void store(DpState& st, std::size_t i, std::size_t j, const dp::Cell& c) {
  st.ins(i, j) = c.ins;
  st.match(i, j) = c.match;
  st.del(i, j) = c.del;
  st.max(i, j) = c.max;
  st.h_ins(i, j) = c.h_ins;
  st.h_match(i, j) = c.h_match;
  st.h_del(i, j) = c.h_del;
}

std::uint32_t push_node(std::vector<ChainNode>& nodes, std::uint32_t parent, std::size_t i,
                        std::size_t j, bool start) {
  ChainNode node;
  node.i = static_cast<std::uint32_t>(i);
  node.start = start ? 1u : 0u;
  node.j = static_cast<std::uint32_t>(j);
  node.parent = parent;
  nodes.push_back(node);
  return static_cast<std::uint32_t>(nodes.size());
}

std::uint32_t pick_chain(std::uint8_t src, std::uint32_t ins, std::uint32_t match,
                         std::uint32_t del) {
  return src == dp::kFromIns ? ins : (src == dp::kFromMatch ? match : del);
}

}  // namespace

std::size_t DpState::bytes() const noexcept {
  return ins.bytes() + match.bytes() + del.bytes() + max.bytes() + h_ins.bytes() +
         h_match.bytes() + h_del.bytes() + chain_max.bytes() + chain_match.bytes() +
         trace.bytes() + nodes.capacity() * sizeof(ChainNode);
}

std::vector<ChainNode> DpState::chain(std::uint32_t handle) const {
  std::vector<ChainNode> out;
  while (handle != 0) {
    out.push_back(nodes[handle - 1]);
    handle = nodes[handle - 1].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

DpState opberg_fill(const TokenSeq& a, const TokenSeq& b, const ScoringScheme& scheme,
                    const GapModel& gaps, const OpbergParams& raw_params) {
  const OpbergParams params = normalized(raw_params);
  scheme.check_tokens(a.ids);
  scheme.check_tokens(b.ids);
  check_score_range(a.size(), b.size(), scheme, gaps.open, gaps.extend,
                    params.jump_penalty);

  const std::size_t rows = a.size() + 1;
  const std::size_t cols = b.size() + 1;
  if (rows * cols >= (std::size_t{1} << 31)) throw ConfigError("sequences too long");

  DpState st;
  st.ins = Matrix<Score>(rows, cols, kNegInf);
  st.match = Matrix<Score>(rows, cols, 0);
  st.del = Matrix<Score>(rows, cols, kNegInf);
  st.max = Matrix<Score>(rows, cols, 0);
  st.h_ins = Matrix<Score>(rows, cols, 0);
  st.h_match = Matrix<Score>(rows, cols, 0);
  st.h_del = Matrix<Score>(rows, cols, 0);
  st.chain_max = Matrix<std::uint32_t>(rows, cols, 0);
  st.chain_match = Matrix<std::uint32_t>(rows, cols, 0);
  st.trace = Matrix<std::uint16_t>(rows, cols, 0);
  st.a = a.ids;
  st.b = b.ids;
  st.scheme = scheme;
  st.gaps = gaps;
  st.params = params;

  const auto k = dp::Constants::from(gaps, params);
  // X for the gap states only needs the current and previous row.
  std::vector<std::uint32_t> x_ins_prev(cols, 0), x_ins_cur(cols, 0);
  std::vector<std::uint32_t> x_del_prev(cols, 0), x_del_cur(cols, 0);

  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      dp::Trace tr;
      const dp::Cell out =
          dp::step(load(st, i - 1, j), load(st, i, j - 1), load(st, i - 1, j - 1),
                   scheme.score_unchecked(a.ids[i - 1], b.ids[j - 1]), k, tr);
      store(st, i, j, out);
      st.trace(i, j) = tr.pack();

      x_ins_cur[j] = pick_chain(tr.ins, x_ins_prev[j], st.chain_match(i - 1, j), x_del_prev[j]);
      x_del_cur[j] =
          pick_chain(tr.del, x_ins_cur[j - 1], st.chain_match(i, j - 1), x_del_cur[j - 1]);
      std::uint32_t x = 0;
      switch (tr.match) {
        case dp::kDiagIns:
          x = x_ins_prev[j - 1];
          break;
        case dp::kDiagMatch:
          x = st.chain_match(i - 1, j - 1);
          break;
        case dp::kDiagDel:
          x = x_del_prev[j - 1];
          break;
        case dp::kJump:
          x = push_node(st.nodes, st.chain_max(i - 1, j - 1), i, j, true);
          break;
        default:
          break;
      }
      st.chain_match(i, j) = x;

      switch (tr.max) {
        case dp::kFeed:
          st.chain_max(i, j) = push_node(st.nodes, x, i, j, false);
          break;
        case dp::kUp:
          st.chain_max(i, j) = st.chain_max(i - 1, j);
          break;
        default:
          st.chain_max(i, j) = st.chain_max(i, j - 1);
          break;
      }
    }
    std::swap(x_ins_prev, x_ins_cur);
    std::swap(x_del_prev, x_del_cur);
  }
  return st;
}

Cell objective_cell(const DpState& st) {
  const std::size_t n = st.rows() - 1;
  const std::size_t m = st.cols() - 1;
  const Score best = st.max(n, m);
  Cell found{n, m};
  bool seen = false;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (st.max(i, j) > best) throw std::logic_error("opberg: max state is not monotone");
      if (!seen && st.max(i, j) == best) found = {i, j}, seen = true;
    }
  }
  return found;
}

std::vector<Segment> traceback(const DpState& st, Cell end_cell) {
  const auto k = dp::Constants::from(st.gaps, st.params);
  std::vector<Segment> segments;
  std::size_t i = end_cell.i;
  std::size_t j = end_cell.j;

  while (i > 0 && j > 0) {
    const auto tr = dp::Trace::unpack(st.trace(i, j));
    if (tr.max == dp::kUp) {
      --i;
      continue;
    }
    if (tr.max == dp::kLeft) {
      --j;
      continue;
    }

    // Alignment ending at (i, j) in the match state.
    const std::size_t end_i = i;
    const std::size_t end_j = j;
    const Score fed = st.max(i, j);
    const Score end_match = st.match(i, j);
    std::string ops;
    std::uint8_t state = dp::kFromMatch;
    bool jumped = false;
    while (true) {
      const auto t = dp::Trace::unpack(st.trace(i, j));
      if (state == dp::kFromMatch) {
        if (i == 0 || j == 0 || t.match == dp::kZero) break;
        ops.push_back('M');
        --i;
        --j;
        if (t.match == dp::kJump) {
          jumped = true;
          break;
        }
        state = static_cast<std::uint8_t>(t.match - 1);
      } else if (state == dp::kFromIns) {
        if (i == 0) throw std::logic_error("opberg: traceback left the matrix");
        ops.push_back('I');
        state = t.ins;
        --i;
      } else {
        if (j == 0) throw std::logic_error("opberg: traceback left the matrix");
        ops.push_back('D');
        state = t.del;
        --j;
      }
    }
    std::reverse(ops.begin(), ops.end());

    // Value the segment was built on: the max state before the jump, or nothing.
    const Score base = jumped ? st.max(i, j) + k.jump : 0;
    const Score raw = end_match - base;
    if (detail::rescore(ops, i + 1, j + 1, st.a, st.b, st.scheme, st.gaps.open,
                        st.gaps.extend) != raw) {
      throw std::logic_error("opberg: traceback does not reproduce the alignment score");
    }
    Segment seg = detail::make_segment(end_i, end_j, std::move(ops));
    seg.score_length = detail::rescore(detail::expand_cigar(seg.cigar), seg.a_start,
                                       seg.b_start, st.a, st.b, st.scheme, st.gaps.open,
                                       st.gaps.extend);
    seg.segment_score = fed - base;
    segments.push_back(std::move(seg));
    if (!jumped) break;
  }
  std::reverse(segments.begin(), segments.end());
  return segments;
}

AlignmentResult opberg_align(const TokenSeq& a, const TokenSeq& b,
                             const ScoringScheme& scheme, const GapModel& gaps,
                             const OpbergParams& params) {
  return opberg_result(opberg_fill(a, b, scheme, gaps, params));
}

AlignmentResult opberg_result(const DpState& st) {
  const OpbergParams& params = st.params;
  AlignmentResult result;
  result.mode = Mode::opberg;
  const Cell end = objective_cell(st);
  const Score best = st.max(end.i, end.j);
  if (best <= 0) return result;

  result.total_score = best;
  result.segments = traceback(st, end);
  result.breakpoints = detail::transit_breakpoints(result.segments);

  // The N chain at the end cell must describe the same path: exits and
  // jumps alternate, ending with the exit at the last segment.
  const auto chain = st.chain(st.chain_max(end.i, end.j));
  std::vector<Cell> from_chain;
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) from_chain.push_back({chain[t].i, chain[t].j});
  if (chain.empty() || chain.back().start || from_chain != result.breakpoints ||
      chain.size() != 2 * result.segments.size() - 1) {
    throw std::logic_error("opberg: breakpoint chain disagrees with traceback");
  }

  Score check = 0;
  for (const auto& s : result.segments) check += s.segment_score;
  check += params.jump_penalty * static_cast<Score>(result.segments.size() - 1);
  if (check != best) throw std::logic_error("opberg: segment scores do not sum to the objective");
  return result;
}

}  // namespace opberg

#pragma once

// Single-cell recurrences shared by the full fills and the scalar score
// kernels. The AVX2 kernels re-implement exactly these steps lane-wise.

#include <cstdint>

#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg::dp {

// Predecessor state of a gap cell.
enum GapSrc : std::uint8_t { kFromIns = 0, kFromMatch = 1, kFromDel = 2 };
// Predecessor of a match cell. kZero is the empty alignment; kJump enters
// from the max state (opberg only).
enum MatchSrc : std::uint8_t { kZero = 0, kDiagIns = 1, kDiagMatch = 2, kDiagDel = 3, kJump = 4 };
// Predecessor of a max cell.
enum MaxSrc : std::uint8_t { kFeed = 0, kUp = 1, kLeft = 2 };

struct Trace {
  std::uint8_t ins = kFromIns;
  std::uint8_t del = kFromDel;
  std::uint8_t match = kZero;
  std::uint8_t max = kUp;

  std::uint16_t pack() const noexcept {
    return static_cast<std::uint16_t>(ins | (del << 2) | (match << 4) | (max << 7));
  }
  static Trace unpack(std::uint16_t v) noexcept {
    return {static_cast<std::uint8_t>(v & 0x3), static_cast<std::uint8_t>((v >> 2) & 0x3),
            static_cast<std::uint8_t>((v >> 4) & 0x7), static_cast<std::uint8_t>((v >> 7) & 0x3)};
  }
};

/// Values of one DP cell.
struct Cell {
  Score ins = kNegInf;
  Score match = 0;
  Score del = kNegInf;
  Score max = 0;
  Score h_ins = 0;
  Score h_match = 0;
  Score h_del = 0;
};

inline constexpr Cell kBoundary{};

struct Constants {
  Score open_extend;  // O + E
  Score extend;       // E
  Score jump;         // P
  Score alpha;
  Score beta;
  BetaMode beta_mode;
  GammaSpec gamma;

  static Constants from(const GapModel& gaps, const OpbergParams& p) {
    return {gaps.open + gaps.extend, gaps.extend, p.jump_penalty, p.alpha,
            p.beta, p.beta_mode, p.gamma};
  }
};

inline Score pick_h(std::uint8_t src, const Cell& c) noexcept {
  return src == kFromIns ? c.h_ins : (src == kFromMatch ? c.h_match : c.h_del);
}

/// Value an alignment ending in L_G hands to the max state (zeta).
inline Score feed_value(Score match, Score h_match, const Constants& k) noexcept {
  if (k.beta_mode == BetaMode::absolute) {
    return match >= k.beta ? match : gamma_apply(k.gamma, match, k.beta);
  }
  const Score len = match - h_match;
  return len >= k.beta ? match : match - len + gamma_apply(k.gamma, len, k.beta);
}

/// Insertion state: gap consuming a_i, from (i-1, j).
inline void step_ins(const Cell& up, const Constants& k, Cell& out, Trace& tr) noexcept {
  Score best = up.ins + k.extend;
  std::uint8_t src = kFromIns;
  if (Score c = up.match + k.open_extend; c > best) best = c, src = kFromMatch;
  if (Score c = up.del + k.open_extend; c > best) best = c, src = kFromDel;
  out.ins = best;
  out.h_ins = pick_h(src, up);
  tr.ins = src;
}

/// Deletion state: gap consuming b_j, from (i, j-1).
inline void step_del(const Cell& left, const Constants& k, Cell& out, Trace& tr) noexcept {
  Score best = left.ins + k.open_extend;
  std::uint8_t src = kFromIns;
  if (Score c = left.match + k.open_extend; c > best) best = c, src = kFromMatch;
  if (Score c = left.del + k.extend; c > best) best = c, src = kFromDel;
  out.del = best;
  out.h_del = pick_h(src, left);
  tr.del = src;
}

/// Diagonal extension of any alignment state, floored at the empty alignment.
/// Returns the value; `src` receives the winning case.
inline Score step_delta(const Cell& diag, Score s, std::uint8_t& src) noexcept {
  Score best = 0;
  src = kZero;
  if (Score c = diag.ins + s; c > best) best = c, src = kDiagIns;
  if (Score c = diag.match + s; c > best) best = c, src = kDiagMatch;
  if (Score c = diag.del + s; c > best) best = c, src = kDiagDel;
  return best;
}

inline Score h_of_delta(std::uint8_t src, const Cell& diag, Score theta) noexcept {
  switch (src) {
    case kDiagIns:
      return diag.h_ins;
    case kDiagMatch:
      return diag.h_match;
    case kDiagDel:
      return diag.h_del;
    default:
      return theta;
  }
}

/// Full OpBerg cell: L_I, L_D, L_G (with the alpha-gated jump), H_*, M.
inline Cell step(const Cell& up, const Cell& left, const Cell& diag, Score s,
                 const Constants& k, Trace& tr) noexcept {
  Cell out;
  step_ins(up, k, out, tr);
  step_del(left, k, out, tr);

  const Score theta = up.max > left.max ? up.max : left.max;
  std::uint8_t dsrc;
  const Score delta = step_delta(diag, s, dsrc);
  const Score psi = h_of_delta(dsrc, diag, theta);
  const Score pi = diag.max + s + k.jump;
  const Score epsilon = (delta - psi <= k.alpha) ? pi : kNegInf;

  if (epsilon > delta) {
    out.match = epsilon;
    out.h_match = theta;
    tr.match = kJump;
  } else {
    out.match = delta;
    out.h_match = psi;
    tr.match = dsrc;
  }

  // The empty alignment does not feed the max state.
  Score best = up.max;
  std::uint8_t msrc = kUp;
  if (tr.match != kZero) {
    const Score zeta = feed_value(out.match, out.h_match, k);
    if (zeta >= best) best = zeta, msrc = kFeed;
  }
  if (left.max > best) best = left.max, msrc = kLeft;
  out.max = best;
  tr.max = msrc;
  return out;
}

/// Smith-Waterman cell: the same alignment states without jumps or max state.
inline Cell step_local(const Cell& up, const Cell& left, const Cell& diag, Score s,
                       const Constants& k, Trace& tr) noexcept {
  Cell out;
  step_ins(up, k, out, tr);
  step_del(left, k, out, tr);
  std::uint8_t dsrc;
  out.match = step_delta(diag, s, dsrc);
  tr.match = dsrc;
  return out;
}

}  // namespace opberg::dp

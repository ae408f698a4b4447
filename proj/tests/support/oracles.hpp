#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library: plain recursion and textbook global alignment.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace oracle {

using opberg::Score;
using opberg::ScoringScheme;
using opberg::TokenId;
using opberg::TokenSeq;

constexpr long long kNone = std::numeric_limits<long long>::min() / 4;

/// Every gapped global alignment of a[ai..ae) and b[bi..be), enumerated
/// column by column. Affine cost: a run of L gap columns costs open + L*extend.
inline long long enumerate_global(const std::vector<TokenId>& a, std::size_t ai, std::size_t ae,
                                  const std::vector<TokenId>& b, std::size_t bi, std::size_t be,
                                  const ScoringScheme& s, Score open, Score extend,
                                  char prev = 'M') {
  if (ai == ae && bi == be) return 0;
  long long best = kNone;
  if (ai < ae && bi < be) {
    best = std::max(best, s.score(a[ai], b[bi]) +
                              enumerate_global(a, ai + 1, ae, b, bi + 1, be, s, open, extend, 'M'));
  }
  if (ai < ae) {
    best = std::max(best, extend + (prev == 'I' ? 0 : open) +
                              enumerate_global(a, ai + 1, ae, b, bi, be, s, open, extend, 'I'));
  }
  if (bi < be) {
    best = std::max(best, extend + (prev == 'D' ? 0 : open) +
                              enumerate_global(a, ai, ae, b, bi + 1, be, s, open, extend, 'D'));
  }
  return best;
}

/// Best single local alignment by enumerating every pair of non-empty
/// substrings and every alignment between them. |A|, |B| <= 6.
inline Score brute_local(const TokenSeq& a, const TokenSeq& b, const ScoringScheme& s,
                         Score open, Score extend) {
  if (a.size() > 6 || b.size() > 6) throw std::invalid_argument("brute_local: too large");
  long long best = 0;
  for (std::size_t i1 = 0; i1 < a.size(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 <= a.size(); ++i2)
      for (std::size_t j1 = 0; j1 < b.size(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 <= b.size(); ++j2)
          best = std::max(best, enumerate_global(a.ids, i1, i2, b.ids, j1, j2, s, open, extend));
  return static_cast<Score>(best);
}

/// Textbook Needleman-Wunsch with linear gap q for a[i1..i2), b[j1..j2).
inline long long global_linear(const std::vector<TokenId>& a, std::size_t i1, std::size_t i2,
                               const std::vector<TokenId>& b, std::size_t j1, std::size_t j2,
                               const ScoringScheme& s, Score q) {
  const std::size_t n = i2 - i1, m = j2 - j1;
  std::vector<std::vector<long long>> f(n + 1, std::vector<long long>(m + 1, 0));
  for (std::size_t x = 1; x <= n; ++x) f[x][0] = f[x - 1][0] + q;
  for (std::size_t y = 1; y <= m; ++y) f[0][y] = f[0][y - 1] + q;
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = 1; y <= m; ++y)
      f[x][y] = std::max({f[x - 1][y - 1] + s.score(a[i1 + x - 1], b[j1 + y - 1]),
                          f[x - 1][y] + q, f[x][y - 1] + q});
  return f[n][m];
}

/// Optimum over every set of colinear, disjoint segments (each any gapped
/// alignment of a pair of substrings) of sum(scores) + p * (k - 1), or 0
/// for the empty set. |A|, |B| <= 8.
inline Score brute_force_oracle(const TokenSeq& a, const TokenSeq& b, const ScoringScheme& s,
                                Score q, Score p) {
  if (a.size() > 8 || b.size() > 8) throw std::invalid_argument("brute_force_oracle: too large");
  const std::size_t n = a.size(), m = b.size();
  // seg[i1][j1][i2][j2]: global score of a[i1..i2) against b[j1..j2).
  std::vector<long long> seg((n + 1) * (m + 1) * (n + 1) * (m + 1), kNone);
  auto at = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) -> long long& {
    return seg[((i1 * (m + 1) + j1) * (n + 1) + i2) * (m + 1) + j2];
  };
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = i1 + 1; i2 <= n; ++i2)
        for (std::size_t j2 = j1 + 1; j2 <= m; ++j2)
          at(i1, j1, i2, j2) = global_linear(a.ids, i1, i2, b.ids, j1, j2, s, q);

  // Best chain whose first segment starts at or after (i0, j0), 0-based.
  std::map<std::pair<std::size_t, std::size_t>, long long> memo;
  std::function<long long(std::size_t, std::size_t)> chain = [&](std::size_t i0,
                                                                  std::size_t j0) -> long long {
    if (auto it = memo.find({i0, j0}); it != memo.end()) return it->second;
    long long best = kNone;
    for (std::size_t i1 = i0; i1 < n; ++i1)
      for (std::size_t i2 = i1 + 1; i2 <= n; ++i2)
        for (std::size_t j1 = j0; j1 < m; ++j1)
          for (std::size_t j2 = j1 + 1; j2 <= m; ++j2) {
            const long long rest = chain(i2, j2);
            best = std::max(best, at(i1, j1, i2, j2) + (rest == kNone ? 0 : std::max(0LL, p + rest)));
          }
    memo[{i0, j0}] = best;
    return best;
  };
  return static_cast<Score>(std::max(0LL, chain(0, 0)));
}

inline TokenSeq random_seq(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet,
                           std::size_t min_len = 0) {
  TokenSeq s;
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  for (std::size_t t = 0; t < len; ++t) s.ids.push_back(static_cast<TokenId>(rng() % alphabet));
  return s;
}

}  // namespace oracle

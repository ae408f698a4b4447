#include <doctest.h>

#include <random>

#include "opberg/error.hpp"
#include "opberg/naive.hpp"
#include "opberg/report.hpp"
#include "support/oracles.hpp"

using namespace opberg;
using namespace opberg::naive_trace;

namespace {

TokenSeq seq(std::initializer_list<TokenId> ids) { return TokenSeq{ids, std::nullopt}; }

const auto kScheme = ScoringScheme::uniform(2, -1);

}  // namespace

TEST_CASE("single match fills the level-0 local state") {
  const auto st = naive_fill(seq({0}), seq({0}), kScheme, -1, 1);
  CHECK(st.local(1, 1, 0) == 2);
  CHECK(st.max(1, 1, 0) == 2);
  CHECK(st.max(1, 1, 1) == 2);
}

TEST_CASE("empty sequence leaves everything at zero") {
  const auto b = seq({0, 1, 2});
  const auto st = naive_fill(seq({}), b, kScheme, -1, 3);
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(st.local(0, j, k) == 0);
      CHECK(st.max(0, j, k) == 0);
    }
  const auto r = naive_optimal(seq({}), b, kScheme, -1, -3, 3);
  CHECK(r.total_score == 0);
  CHECK(r.segments.empty());
}

TEST_CASE("two-level max on a small instance") {
  const auto a = seq({0, 1, 1, 0});
  const auto b = seq({0, 0});
  const auto st = naive_fill(a, b, kScheme, -1, 2);
  CHECK(st.max(4, 2, 1) == 2);
  CHECK(st.max(4, 2, 2) == 4);
  CHECK(oracle::brute_force_oracle(a, b, kScheme, -1, 0) == 4);
  CHECK(oracle::brute_force_oracle(a, b, kScheme, -1, kNegInf) == 2);
}

TEST_CASE("every filled cell is the first maximum of its listed cases") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_seq(rng, 9, 3);
    const auto b = oracle::random_seq(rng, 9, 3);
    const Score q = -static_cast<Score>(rng() % 3);
    const std::size_t k_max = 1 + rng() % 4;
    const auto st = naive_fill(a, b, kScheme, q, k_max);
    for (std::size_t k = 0; k <= k_max; ++k)
      for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j) {
          const Score s = kScheme.score(a.ids[i - 1], b.ids[j - 1]);
          std::vector<std::pair<Score, std::uint8_t>> local{
              {st.local(i - 1, j, k) + q, kLocalUp},
              {st.local(i - 1, j - 1, k) + s, kLocalDiag},
              {st.local(i, j - 1, k) + q, kLocalLeft}};
          if (k > 0) local.push_back({st.max(i - 1, j - 1, k) + s, kLocalJump});
          local.push_back({0, kLocalZero});
          auto best = local.front();
          for (const auto& c : local)
            if (c.first > best.first) best = c;
          REQUIRE(st.local(i, j, k) == best.first);
          REQUIRE(local_src(st.trace(i, j, k)) == best.second);

          const std::vector<std::pair<Score, std::uint8_t>> max{
              {st.max(i - 1, j, k), kMaxUp},
              {st.local(i, j, k == 0 ? 0 : k - 1), kMaxLocal},
              {st.max(i, j - 1, k), kMaxLeft}};
          auto mbest = max.front();
          for (const auto& c : max)
            if (c.first > mbest.first) mbest = c;
          REQUIRE(st.max(i, j, k) == mbest.first);
          REQUIRE(max_src(st.trace(i, j, k)) == mbest.second);

          CHECK(st.local(i, j, k) >= 0);
          CHECK(st.max(i, j, k) >= st.max(i - 1, j, k));
          CHECK(st.max(i, j, k) >= st.max(i, j - 1, k));
        }
  }
}

TEST_CASE("objective equals the exhaustive segmentation oracle") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t alphabet = 2 + rng() % 3;
    const auto a = oracle::random_seq(rng, 8, alphabet);
    const auto b = oracle::random_seq(rng, 8, alphabet);
    const Score q = -static_cast<Score>(rng() % 3);
    const Score p = -static_cast<Score>(rng() % 5);
    const auto r = naive_optimal(a, b, kScheme, q, p, effective_k_max(a, b, std::nullopt));
    REQUIRE(r.total_score == oracle::brute_force_oracle(a, b, kScheme, q, p));
    CHECK(invariant_violations(r, p).empty());
  }
}

TEST_CASE("identical sequences use one full-length segment") {
  const auto a = seq({0, 1, 2, 3, 1, 0});
  const auto r = naive_optimal(a, a, kScheme, -1, -3, 6);
  CHECK(r.total_score == 12);
  REQUIRE(r.k() == 1);
  CHECK(r.segments[0] == Segment{1, 6, 1, 6, 12, 12, "6M"});
}

TEST_CASE("a priced-out jump forces at most one segment") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_seq(rng, 10, 3);
    const auto b = oracle::random_seq(rng, 10, 3);
    const Score p = -2 * static_cast<Score>(std::min(a.size(), b.size())) * 2 - 1;
    CHECK(naive_optimal(a, b, kScheme, -1, p, 10).k() <= 1);
  }
}

TEST_CASE("split instance picks two segments") {
  // A A X X B B vs A A B B: 4 + 4 - 1 beats 8 - 2 in one segment.
  const auto a = seq({0, 0, 2, 2, 1, 1});
  const auto b = seq({0, 0, 1, 1});
  const auto r = naive_optimal(a, b, kScheme, -1, -1, 6);
  CHECK(r.total_score == 7);
  REQUIRE(r.k() == 2);
  CHECK(r.segments[0] == Segment{1, 2, 1, 2, 4, 4, "2M"});
  CHECK(r.segments[1] == Segment{5, 6, 3, 4, 4, 4, "2M"});
  CHECK(r.breakpoints == std::vector<Cell>{{2, 2}, {5, 3}});
  CHECK(oracle::brute_force_oracle(a, b, kScheme, -1, -1) == 7);
  // With a steeper jump penalty the gapped single segment wins.
  CHECK(naive_optimal(a, b, kScheme, -1, -3, 6).k() == 1);
}

TEST_CASE("k_max handling") {
  const auto a = seq({0, 1, 0});
  const auto b = seq({0, 0});
  CHECK(effective_k_max(a, b, std::nullopt) == 3);
  CHECK(effective_k_max(a, b, 99) == 3);
  CHECK(effective_k_max(a, b, 2) == 2);
  CHECK(effective_k_max(seq({}), seq({}), std::nullopt) == 1);
  CHECK_THROWS_AS(effective_k_max(a, b, 0), ConfigError);
  CHECK_THROWS_AS(naive_fill(a, b, kScheme, -1, 0), ConfigError);
  CHECK_THROWS_AS(naive_optimal(a, b, kScheme, -1, 2, 3), ConfigError);
  // Capping k caps the number of segments.
  const auto r = naive_optimal(seq({0, 2, 1, 2, 0}), seq({0, 1, 0}), kScheme, -1, 0, 1);
  CHECK(r.k() <= 1);
}

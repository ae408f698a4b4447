#include <algorithm>
#include <array>

#include "align/dp_step.hpp"
#include "kernels/avx2_common.hpp"

namespace opberg::kernels {

namespace {

using namespace avx2;

enum Field { kIns, kMatch, kDel, kMax, kHIns, kHMatch, kHDel, kFields };

struct Diagonal {
  std::array<std::vector<Score>, kFields> f;

  explicit Diagonal(std::size_t size) {
    for (auto& v : f) v.assign(size, 0);
  }
  void set(std::size_t i, const dp::Cell& c) {
    f[kIns][i] = c.ins;
    f[kMatch][i] = c.match;
    f[kDel][i] = c.del;
    f[kMax][i] = c.max;
    f[kHIns][i] = c.h_ins;
    f[kHMatch][i] = c.h_match;
    f[kHDel][i] = c.h_del;
  }
};

class Gamma {
 public:
  Gamma(const GammaSpec& g, Score beta)
      : kind_(g.kind), beta_(_mm256_set1_epi32(beta)), c_(_mm256_set1_pd(g.c)) {}

  __m256i operator()(__m256i x) const {
    switch (kind_) {
      case GammaKind::zero:
        return _mm256_setzero_si256();
      case GammaKind::identity:
        return x;
      case GammaKind::shortfall:
        return _mm256_sub_epi32(x, beta_);
      case GammaKind::linear:
        break;
    }
    constexpr int kFloor = _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC;
    const __m256d lo = _mm256_round_pd(
        _mm256_mul_pd(c_, _mm256_cvtepi32_pd(_mm256_castsi256_si128(x))), kFloor);
    const __m256d hi = _mm256_round_pd(
        _mm256_mul_pd(c_, _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1))), kFloor);
    return _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
  }

 private:
  GammaKind kind_;
  __m256i beta_;
  __m256d c_;
};

}  // namespace

Score opberg_score_avx2(const ScoreProblem& p) {
  const std::size_t n = p.a.size();
  const std::size_t m = p.b.size();
  if (n == 0 || m == 0) return 0;

  const auto k = dp::Constants::from(p.gaps, p.params);
  const Tokens tokens(p);
  const Substitution subst(p);
  const Gamma gamma(k.gamma, k.beta);
  const bool relative = k.beta_mode == BetaMode::relative;

  const __m256i zero = _mm256_setzero_si256();
  const __m256i neg_inf = _mm256_set1_epi32(kNegInf);
  const __m256i ext = _mm256_set1_epi32(k.extend);
  const __m256i open_ext = _mm256_set1_epi32(k.open_extend);
  const __m256i jump = _mm256_set1_epi32(k.jump);
  const __m256i alpha = _mm256_set1_epi32(k.alpha);
  const __m256i beta = _mm256_set1_epi32(k.beta);

  const std::size_t size = n + 1 + kLanes;
  Diagonal d2(size), d1(size), d0(size);
  d2.set(0, dp::kBoundary);  // diagonal 0
  d1.set(0, dp::kBoundary);  // diagonal 1
  d1.set(1, dp::kBoundary);

  for (std::size_t d = 2; d <= n + m; ++d) {
    const std::size_t lo = d > m ? d - m : 1;
    const std::size_t hi = std::min(n, d - 1);
    for (std::size_t i = lo; i <= hi; i += kLanes) {
      const __m256i s = subst(tokens, d, i);

      // Insertion from (i-1, j).
      const __m256i up_ins = load(d1.f[kIns], i - 1);
      const __m256i up_match = load(d1.f[kMatch], i - 1);
      const __m256i up_del = load(d1.f[kDel], i - 1);
      __m256i ins = _mm256_add_epi32(up_ins, ext);
      __m256i h_ins = load(d1.f[kHIns], i - 1);
      __m256i c = _mm256_add_epi32(up_match, open_ext);
      __m256i gt = _mm256_cmpgt_epi32(c, ins);
      ins = select(gt, c, ins);
      h_ins = select(gt, load(d1.f[kHMatch], i - 1), h_ins);
      c = _mm256_add_epi32(up_del, open_ext);
      gt = _mm256_cmpgt_epi32(c, ins);
      ins = select(gt, c, ins);
      h_ins = select(gt, load(d1.f[kHDel], i - 1), h_ins);

      // Deletion from (i, j-1).
      __m256i del = _mm256_add_epi32(load(d1.f[kIns], i), open_ext);
      __m256i h_del = load(d1.f[kHIns], i);
      c = _mm256_add_epi32(load(d1.f[kMatch], i), open_ext);
      gt = _mm256_cmpgt_epi32(c, del);
      del = select(gt, c, del);
      h_del = select(gt, load(d1.f[kHMatch], i), h_del);
      c = _mm256_add_epi32(load(d1.f[kDel], i), ext);
      gt = _mm256_cmpgt_epi32(c, del);
      del = select(gt, c, del);
      h_del = select(gt, load(d1.f[kHDel], i), h_del);

      const __m256i up_max = load(d1.f[kMax], i - 1);
      const __m256i left_max = load(d1.f[kMax], i);
      const __m256i theta = _mm256_max_epi32(up_max, left_max);

      // Diagonal extension floored at zero; psi follows the winner.
      __m256i delta = zero;
      __m256i psi = theta;
      __m256i live = zero;
      c = _mm256_add_epi32(load(d2.f[kIns], i - 1), s);
      gt = _mm256_cmpgt_epi32(c, delta);
      delta = select(gt, c, delta);
      psi = select(gt, load(d2.f[kHIns], i - 1), psi);
      live = _mm256_or_si256(live, gt);
      c = _mm256_add_epi32(load(d2.f[kMatch], i - 1), s);
      gt = _mm256_cmpgt_epi32(c, delta);
      delta = select(gt, c, delta);
      psi = select(gt, load(d2.f[kHMatch], i - 1), psi);
      live = _mm256_or_si256(live, gt);
      c = _mm256_add_epi32(load(d2.f[kDel], i - 1), s);
      gt = _mm256_cmpgt_epi32(c, delta);
      delta = select(gt, c, delta);
      psi = select(gt, load(d2.f[kHDel], i - 1), psi);
      live = _mm256_or_si256(live, gt);

      const __m256i pi = _mm256_add_epi32(_mm256_add_epi32(load(d2.f[kMax], i - 1), s), jump);
      const __m256i blocked = _mm256_cmpgt_epi32(_mm256_sub_epi32(delta, psi), alpha);
      const __m256i epsilon = select(blocked, neg_inf, pi);
      const __m256i jumps = _mm256_cmpgt_epi32(epsilon, delta);
      const __m256i match = select(jumps, epsilon, delta);
      const __m256i h_match = select(jumps, theta, psi);
      live = _mm256_or_si256(live, jumps);

      __m256i zeta;
      if (relative) {
        const __m256i len = _mm256_sub_epi32(match, h_match);
        const __m256i low = _mm256_cmpgt_epi32(beta, len);
        zeta = select(low, _mm256_add_epi32(_mm256_sub_epi32(match, len), gamma(len)), match);
      } else {
        zeta = select(_mm256_cmpgt_epi32(beta, match), gamma(match), match);
      }

      __m256i best = up_max;
      const __m256i feed = _mm256_andnot_si256(_mm256_cmpgt_epi32(best, zeta), live);
      best = select(feed, zeta, best);
      best = select(_mm256_cmpgt_epi32(left_max, best), left_max, best);

      store(d0.f[kIns], i, ins);
      store(d0.f[kMatch], i, match);
      store(d0.f[kDel], i, del);
      store(d0.f[kMax], i, best);
      store(d0.f[kHIns], i, h_ins);
      store(d0.f[kHMatch], i, h_match);
      store(d0.f[kHDel], i, h_del);
    }
    if (d <= m) d0.set(0, dp::kBoundary);
    if (d <= n) d0.set(d, dp::kBoundary);
    std::swap(d2, d1);
    std::swap(d1, d0);
  }
  return d1.f[kMax][n];
}

}  // namespace opberg::kernels

#include <algorithm>

#include "align/dp_step.hpp"
#include "kernels/avx2_common.hpp"

namespace opberg::kernels {

namespace {

struct Diagonal {
  std::vector<Score> ins, match, del;

  explicit Diagonal(std::size_t size) : ins(size, kNegInf), match(size, 0), del(size, kNegInf) {}
  void set_boundary(std::size_t i) {
    ins[i] = kNegInf;
    match[i] = 0;
    del[i] = kNegInf;
  }
};

}  // namespace

Score sw_score_avx2(const ScoreProblem& p) {
  using namespace avx2;
  const std::size_t n = p.a.size();
  const std::size_t m = p.b.size();
  if (n == 0 || m == 0) return 0;

  const auto k = dp::Constants::from(p.gaps, p.params);
  const Tokens tokens(p);
  const Substitution subst(p);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ext = _mm256_set1_epi32(k.extend);
  const __m256i open_ext = _mm256_set1_epi32(k.open_extend);

  const std::size_t size = n + 1 + kLanes;
  Diagonal d2(size), d1(size), d0(size);
  __m256i best = zero;

  for (std::size_t d = 2; d <= n + m; ++d) {
    const std::size_t lo = d > m ? d - m : 1;
    const std::size_t hi = std::min(n, d - 1);
    for (std::size_t i = lo; i <= hi; i += kLanes) {
      const __m256i s = subst(tokens, d, i);
      __m256i ins = _mm256_add_epi32(load(d1.ins, i - 1), ext);
      ins = _mm256_max_epi32(ins, _mm256_add_epi32(load(d1.match, i - 1), open_ext));
      ins = _mm256_max_epi32(ins, _mm256_add_epi32(load(d1.del, i - 1), open_ext));

      __m256i del = _mm256_add_epi32(load(d1.ins, i), open_ext);
      del = _mm256_max_epi32(del, _mm256_add_epi32(load(d1.match, i), open_ext));
      del = _mm256_max_epi32(del, _mm256_add_epi32(load(d1.del, i), ext));

      __m256i match = _mm256_max_epi32(zero, _mm256_add_epi32(load(d2.ins, i - 1), s));
      match = _mm256_max_epi32(match, _mm256_add_epi32(load(d2.match, i - 1), s));
      match = _mm256_max_epi32(match, _mm256_add_epi32(load(d2.del, i - 1), s));

      store(d0.ins, i, ins);
      store(d0.match, i, match);
      store(d0.del, i, del);
      best = _mm256_max_epi32(best, _mm256_and_si256(lanes_upto(i, hi), match));
    }
    if (d <= m) d0.set_boundary(0);
    if (d <= n) d0.set_boundary(d);
    std::swap(d2, d1);
    std::swap(d1, d0);
  }

  alignas(32) Score lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  return *std::max_element(lanes, lanes + kLanes);
}

}  // namespace opberg::kernels

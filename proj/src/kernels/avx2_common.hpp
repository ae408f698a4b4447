#pragma once

// Anti-diagonal layout shared by the AVX2 kernels. Cell (i, d - i) of
// diagonal d lives at index i of that diagonal's arrays; eight consecutive
// i are processed per vector. Lanes past the valid range compute junk that
// is never read back (see the boundary rewrite in each kernel).

#include <immintrin.h>

#include <cstddef>
#include <vector>

#include "opberg/kernels.hpp"

namespace opberg::kernels::avx2 {

inline constexpr std::size_t kLanes = 8;

/// Token ids padded with id 0 so over-reading lanes stay inside a matrix.
struct Tokens {
  std::vector<TokenId> a;      // a[i - 1] at index i - 1
  std::vector<TokenId> b_rev;  // b[j - 1] at index m - j

  explicit Tokens(const ScoreProblem& p) : a(p.a.size() + kLanes, 0), b_rev(p.b.size() + kLanes * 2, 0) {
    for (std::size_t i = 0; i < p.a.size(); ++i) a[i] = p.a[i];
    const std::size_t m = p.b.size();
    for (std::size_t j = 1; j <= m; ++j) b_rev[m - j] = p.b[j - 1];
  }
};

/// Substitution scores for cells (i .. i+7, d - i ..).
class Substitution {
 public:
  explicit Substitution(const ScoreProblem& p)
      : uniform_(p.scheme->is_uniform()),
        match_(_mm256_set1_epi32(p.scheme->match_score())),
        mismatch_(_mm256_set1_epi32(p.scheme->mismatch_score())),
        size_(_mm256_set1_epi32(static_cast<int>(p.scheme->matrix_size()))),
        table_(reinterpret_cast<const int*>(p.scheme->table().data())),
        m_(p.b.size()) {}

  __m256i operator()(const Tokens& t, std::size_t d, std::size_t i) const {
    const __m256i ta = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&t.a[i - 1]));
    const __m256i tb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&t.b_rev[m_ + i - d]));
    if (uniform_) return _mm256_blendv_epi8(mismatch_, match_, _mm256_cmpeq_epi32(ta, tb));
    const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(ta, size_), tb);
    return _mm256_i32gather_epi32(table_, idx, 4);
  }

 private:
  bool uniform_;
  __m256i match_;
  __m256i mismatch_;
  __m256i size_;
  const int* table_;
  std::size_t m_;
};

inline __m256i load(const std::vector<Score>& v, std::size_t i) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
}

inline void store(std::vector<Score>& v, std::size_t i, __m256i x) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), x);
}

inline __m256i select(__m256i mask, __m256i if_true, __m256i if_false) {
  return _mm256_blendv_epi8(if_false, if_true, mask);
}

/// Lanes i .. i+7 that are <= last.
inline __m256i lanes_upto(std::size_t i, std::size_t last) {
  const __m256i idx = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(i)),
                                       _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
  return _mm256_cmpgt_epi32(_mm256_set1_epi32(static_cast<int>(last + 1)), idx);
}

}  // namespace opberg::kernels::avx2

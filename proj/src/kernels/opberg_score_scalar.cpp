#include <vector>

#include "align/dp_step.hpp"
#include "opberg/kernels.hpp"

namespace opberg::kernels {

Score opberg_score_scalar(const ScoreProblem& p) {
  const auto k = dp::Constants::from(p.gaps, p.params);
  const std::size_t m = p.b.size();
  std::vector<dp::Cell> prev(m + 1), cur(m + 1);
  dp::Trace tr;
  for (std::size_t i = 1; i <= p.a.size(); ++i) {
    cur[0] = dp::kBoundary;
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = dp::step(prev[j], cur[j - 1], prev[j - 1],
                        p.scheme->score_unchecked(p.a[i - 1], p.b[j - 1]), k, tr);
    }
    std::swap(prev, cur);
  }
  return prev[m].max;
}

}  // namespace opberg::kernels

#include <atomic>
#include <cstdlib>
#include <string>

#include "opberg/error.hpp"
#include "opberg/kernels.hpp"

namespace opberg {

namespace {

bool cpu_has_avx2() {
#if defined(OPBERG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa widest() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa from_env() {
  const char* env = std::getenv("OPBERG_KERNEL");
  if (env == nullptr) return widest();
  const std::string value = env;
  if (value == "scalar") return Isa::scalar;
  if (value == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  return widest();
}

std::atomic<int>& selected() {
  static std::atomic<int> isa{static_cast<int>(from_env())};
  return isa;
}

ScoreProblem checked(const ScoreProblem& problem) {
  if (problem.scheme == nullptr) throw ConfigError("score kernel needs a scoring scheme");
  ScoreProblem p = problem;
  p.params = normalized(problem.params);
  check_score_range(p.a.size(), p.b.size(), *p.scheme, p.gaps.open, p.gaps.extend,
                    p.params.jump_penalty);
  p.scheme->check_tokens(p.a);
  p.scheme->check_tokens(p.b);
  return p;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return static_cast<Isa>(selected().load(std::memory_order_relaxed)); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw ConfigError("kernel " + std::string(to_string(isa)) + " is not available");
  }
  selected().store(static_cast<int>(isa), std::memory_order_relaxed);
}

Score opberg_score(const ScoreProblem& problem) { return opberg_score(problem, active_isa()); }

Score opberg_score(const ScoreProblem& problem, Isa isa) {
  const ScoreProblem p = checked(problem);
#if defined(OPBERG_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(isa)) return kernels::opberg_score_avx2(p);
#endif
  (void)isa;
  return kernels::opberg_score_scalar(p);
}

Score sw_score(const ScoreProblem& problem) { return sw_score(problem, active_isa()); }

Score sw_score(const ScoreProblem& problem, Isa isa) {
  const ScoreProblem p = checked(problem);
#if defined(OPBERG_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(isa)) return kernels::sw_score_avx2(p);
#endif
  (void)isa;
  return kernels::sw_score_scalar(p);
}

}  // namespace opberg

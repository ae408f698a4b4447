#pragma once

#include <span>
#include <string_view>

#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

/// Instruction set a score kernel is compiled for.
enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when the kernel was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Kernel used by the dispatching entry points. Defaults to the widest
/// available ISA; the OPBERG_KERNEL environment variable (scalar|avx2|auto)
/// overrides it.
Isa active_isa();
void set_active_isa(Isa isa);

/// Score-only inputs. Token ids must already be validated against the scheme.
struct ScoreProblem {
  std::span<const TokenId> a;
  std::span<const TokenId> b;
  const ScoringScheme* scheme = nullptr;
  GapModel gaps;
  OpbergParams params;
};

/// Objective value of opberg_align (M at the last cell) without traceback.
Score opberg_score(const ScoreProblem& problem);
Score opberg_score(const ScoreProblem& problem, Isa isa);

/// Best single local alignment score, same recurrences as smith_waterman.
Score sw_score(const ScoreProblem& problem);
Score sw_score(const ScoreProblem& problem, Isa isa);

namespace kernels {
Score opberg_score_scalar(const ScoreProblem& problem);
Score sw_score_scalar(const ScoreProblem& problem);
#if defined(OPBERG_HAVE_AVX2)
Score opberg_score_avx2(const ScoreProblem& problem);
Score sw_score_avx2(const ScoreProblem& problem);
#endif
}  // namespace kernels

}  // namespace opberg

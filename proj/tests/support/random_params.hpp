#pragma once

#include <random>

#include "opberg/params.hpp"
#include "opberg/scoring.hpp"

namespace oracle {

/// Parameters drawn across every branch of the recurrences, inf literals included.
inline opberg::OpbergParams random_params(std::mt19937_64& rng) {
  using namespace opberg;
  OpbergParams p;
  p.jump_penalty = rng() % 6 == 0 ? kNegInf : -static_cast<Score>(rng() % 6);
  p.alpha = rng() % 5 == 0 ? kScoreInf : static_cast<Score>(rng() % 8);
  p.beta = rng() % 5 == 0 ? kNegInf : static_cast<Score>(rng() % 8) - 1;
  p.beta_mode = rng() % 2 ? BetaMode::absolute : BetaMode::relative;
  static const char* kGammas[] = {"zero", "identity", "shortfall", "linear(0.5)", "linear(0.3)"};
  p.gamma = GammaSpec::parse(kGammas[rng() % 5]);
  return p;
}

inline opberg::GapModel random_gaps(std::mt19937_64& rng) {
  const auto open = -static_cast<opberg::Score>(rng() % 4);
  const auto extend = -static_cast<opberg::Score>(rng() % 3);
  return {extend, open, extend};
}

}  // namespace oracle

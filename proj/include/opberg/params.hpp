#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "opberg/types.hpp"

namespace opberg {

enum class GammaKind { zero, identity, shortfall, linear };

/// Weighting applied to an alignment score x that falls below beta:
/// zero -> 0, identity -> x, shortfall -> x - beta, linear(c) -> floor(c*x).
struct GammaSpec {
  GammaKind kind = GammaKind::shortfall;
  double c = 1.0;

  static GammaSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Throws ConfigError for linear(c) with c outside [0, 1].
void validate(const GammaSpec& gamma);

inline Score gamma_apply(const GammaSpec& gamma, Score x, Score beta) noexcept;

/// Public entry point; validates the spec first.
Score gamma_eval(const GammaSpec& gamma, Score x, Score beta);

/// absolute: beta is compared with L_G(i,j); relative: with L_G(i,j) - H_G(i,j).
enum class BetaMode { absolute, relative };

std::optional<BetaMode> parse_beta_mode(std::string_view text);
std::string_view to_string(BetaMode mode);

struct OpbergParams {
  /// P, added on every jump from the max state into a new alignment. Must be <= 0.
  Score jump_penalty = -3;
  /// Score length allowed before a competing alignment blocks a jump.
  Score alpha = 4;
  /// Minimum score for an alignment to feed the max state at full value.
  Score beta = 3;
  BetaMode beta_mode = BetaMode::absolute;
  GammaSpec gamma;
  /// Naive mode only; defaults to max(|A|, |B|).
  std::optional<std::size_t> k_max;
};

/// Clamps alpha/beta/P into [-inf, inf] and rejects invalid combinations.
OpbergParams normalized(const OpbergParams& params);

/// Parses an integer score or the literals "inf" / "-inf" / "+inf".
Score parse_score_literal(std::string_view text);

// Inline so the scalar DP loops can use it without a call.
inline Score gamma_apply(const GammaSpec& gamma, Score x, Score beta) noexcept {
  switch (gamma.kind) {
    case GammaKind::zero:
      return 0;
    case GammaKind::identity:
      return x;
    case GammaKind::shortfall:
      return x - beta;
    case GammaKind::linear:
      break;
  }
  return static_cast<Score>(std::floor(gamma.c * static_cast<double>(x)));
}

}  // namespace opberg

#include "opberg/params.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "opberg/error.hpp"

namespace opberg {

GammaSpec GammaSpec::parse(std::string_view text) {
  if (text == "zero") return {GammaKind::zero, 0.0};
  if (text == "identity") return {GammaKind::identity, 1.0};
  if (text == "shortfall") return {GammaKind::shortfall, 1.0};
  constexpr std::string_view prefix = "linear(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const std::string inner(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    char* end = nullptr;
    const double c = std::strtod(inner.c_str(), &end);
    if (inner.empty() || *end != '\0') {
      throw ConfigError("bad gamma coefficient '" + inner + "'");
    }
    GammaSpec spec{GammaKind::linear, c};
    validate(spec);
    return spec;
  }
  throw ConfigError("unknown gamma '" + std::string(text) +
                    "' (expected zero, identity, shortfall or linear(c))");
}

std::string GammaSpec::to_string() const {
  switch (kind) {
    case GammaKind::zero:
      return "zero";
    case GammaKind::identity:
      return "identity";
    case GammaKind::shortfall:
      return "shortfall";
    case GammaKind::linear:
      break;
  }
  std::ostringstream out;
  out << "linear(" << c << ")";
  return out.str();
}

void validate(const GammaSpec& gamma) {
  if (gamma.kind == GammaKind::linear && !(gamma.c >= 0.0 && gamma.c <= 1.0)) {
    throw ConfigError("gamma linear(c) needs 0 <= c <= 1");
  }
}

Score gamma_eval(const GammaSpec& gamma, Score x, Score beta) {
  validate(gamma);
  return gamma_apply(gamma, x, beta);
}

std::optional<BetaMode> parse_beta_mode(std::string_view text) {
  if (text == "absolute") return BetaMode::absolute;
  if (text == "relative") return BetaMode::relative;
  return std::nullopt;
}

std::string_view to_string(BetaMode mode) {
  return mode == BetaMode::absolute ? "absolute" : "relative";
}

OpbergParams normalized(const OpbergParams& params) {
  OpbergParams out = params;
  auto clamp = [](Score v) { return std::clamp(v, kNegInf, kScoreInf); };
  out.alpha = clamp(out.alpha);
  out.beta = clamp(out.beta);
  out.jump_penalty = clamp(out.jump_penalty);
  if (out.alpha < 0) throw ConfigError("alpha must be >= 0");
  if (out.jump_penalty > 0) throw ConfigError("jump penalty must be <= 0");
  if (out.k_max && *out.k_max == 0) throw ConfigError("k-max must be >= 1");
  validate(out.gamma);
  return out;
}

Score parse_score_literal(std::string_view text) {
  if (text == "inf" || text == "+inf") return kScoreInf;
  if (text == "-inf") return kNegInf;
  long long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ConfigError("bad score literal '" + std::string(text) + "'");
  }
  return static_cast<Score>(std::clamp<long long>(value, kNegInf, kScoreInf));
}

}  // namespace opberg

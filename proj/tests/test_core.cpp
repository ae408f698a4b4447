#include <doctest.h>

#include <random>

#include "opberg/error.hpp"
#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

using namespace opberg;

TEST_CASE("interning assigns ids in first-seen order") {
  Alphabet alpha;
  const auto seq = intern({"A", "B", "A"}, alpha);
  CHECK(seq.ids == std::vector<TokenId>{0, 1, 0});
  CHECK(alpha.size() == 2);

  Alphabet other;
  CHECK(intern({}, other).empty());
  CHECK(other.size() == 0);

  Alphabet pos;
  const auto tags = intern({"NN", "VBZ", "NN", "DT"}, pos);
  CHECK(tags.ids == std::vector<TokenId>{0, 1, 0, 2});
  CHECK(pos.size() == 3);
  CHECK(pos.token(1).surface == "VBZ");
}

TEST_CASE("interning round-trips and grows monotonically") {
  std::mt19937_64 rng(7);
  Alphabet alpha;
  std::size_t previous = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> tags;
    for (std::size_t t = rng() % 10; t > 0; --t) tags.push_back("T" + std::to_string(rng() % 12));
    const auto seq = intern(tags, alpha);
    CHECK(surfaces(seq, alpha) == tags);
    CHECK(alpha.size() >= previous);
    previous = alpha.size();
  }
  CHECK_THROWS_AS(alpha.surface(999), IndexError);
}

TEST_CASE("uniform and matrix scoring") {
  const auto uni = ScoringScheme::uniform(2, -1);
  CHECK(score(uni, {0, "A"}, {0, "A"}) == 2);
  CHECK(score(uni, {0, "A"}, {1, "B"}) == -1);
  CHECK(uni.score(3, 5) == uni.score(5, 3));
  CHECK(uni.warnings().empty());
  CHECK(ScoringScheme::uniform(0, 1).warnings().size() == 2);

  const auto mat = ScoringScheme::matrix(2, {1, -3, -2, 4});
  CHECK(mat.score(0, 1) == -3);
  CHECK(mat.score(1, 0) == -2);
  CHECK_FALSE(mat.is_symmetric());
  CHECK_THROWS_AS(mat.score(0, 2), AlphabetMismatchError);
  CHECK_THROWS_AS(mat.check_tokens(std::vector<TokenId>{0, 2}), AlphabetMismatchError);
}

TEST_CASE("matrix files") {
  Alphabet alpha;
  const auto m = parse_matrix("# tags\n   NN VB\nNN  3 -1\nVB -1  2\n", alpha);
  CHECK(m.matrix_size() == 2);
  CHECK(m.score(*alpha.find("NN"), *alpha.find("VB")) == -1);
  CHECK(m.score(1, 1) == 2);

  Alphabet a2;
  CHECK_THROWS_AS(parse_matrix("NN VB\nNN 1\nVB 1 1\n", a2), ParseError);
  Alphabet a3;
  CHECK_THROWS_AS(parse_matrix("NN VB\nNN 1 x\nVB 1 1\n", a3), ParseError);
  Alphabet a4;
  a4.intern("VB");
  CHECK_THROWS_AS(parse_matrix("NN VB\nNN 1 0\nVB 0 1\n", a4), ParseError);
}

TEST_CASE("gap model warns on positive penalties") {
  CHECK(GapModel{}.warnings().empty());
  CHECK(GapModel{1, 0, 0}.warnings().size() == 1);
  const auto lin = GapModel::linear_only(-2);
  CHECK(lin.open == 0);
  CHECK(lin.extend == -2);
}

TEST_CASE("gamma functions") {
  CHECK(gamma_eval(GammaSpec::parse("zero"), 2, 3) == 0);
  CHECK(gamma_eval(GammaSpec::parse("shortfall"), 2, 3) == -1);
  CHECK(gamma_eval(GammaSpec::parse("identity"), 2, 3) == 2);
  CHECK(gamma_eval(GammaSpec::parse("linear(0.5)"), 2, 3) == 1);
  CHECK(gamma_eval(GammaSpec::parse("linear(0.5)"), -3, 3) == -2);
  CHECK_THROWS_AS(GammaSpec::parse("linear(1.5)"), ConfigError);
  CHECK_THROWS_AS(GammaSpec::parse("linear()"), ConfigError);
  CHECK_THROWS_AS(GammaSpec::parse("cubic"), ConfigError);
  CHECK_THROWS_AS(gamma_eval({GammaKind::linear, -0.1}, 1, 2), ConfigError);
  CHECK(GammaSpec::parse("linear(0.25)").to_string() == "linear(0.25)");

  // Sub-threshold alignments never gain score (alignment scores are >= 0).
  for (const char* g : {"zero", "identity", "shortfall", "linear(0)", "linear(0.3)", "linear(1)"}) {
    const auto spec = GammaSpec::parse(g);
    for (Score beta = 0; beta <= 12; ++beta) {
      for (Score x = 0; x < beta; ++x) CHECK(gamma_eval(spec, x, beta) <= x);
    }
  }
}

TEST_CASE("score literals and parameter validation") {
  CHECK(parse_score_literal("inf") == kScoreInf);
  CHECK(parse_score_literal("+inf") == kScoreInf);
  CHECK(parse_score_literal("-inf") == kNegInf);
  CHECK(parse_score_literal("-7") == -7);
  CHECK(parse_score_literal("+3") == 3);
  CHECK(parse_score_literal("99999999999") == kScoreInf);
  CHECK_THROWS_AS(parse_score_literal("1.5"), ConfigError);
  CHECK_THROWS_AS(parse_score_literal(""), ConfigError);

  OpbergParams p;
  p.alpha = -1;
  CHECK_THROWS_AS(normalized(p), ConfigError);
  p = {};
  p.jump_penalty = 1;
  CHECK_THROWS_AS(normalized(p), ConfigError);
  p = {};
  p.k_max = 0;
  CHECK_THROWS_AS(normalized(p), ConfigError);
  CHECK(parse_beta_mode("relative") == BetaMode::relative);
  CHECK_FALSE(parse_beta_mode("other"));
}

TEST_CASE("score range guard") {
  const auto s = ScoringScheme::uniform(1000, -1000);
  CHECK_NOTHROW(check_score_range(10000, 10000, s, -1000, -1000, -1000));
  CHECK_NOTHROW(check_score_range(10, 10, s, -1000, -1000, kNegInf));
  CHECK_THROWS_AS(check_score_range(100000, 100000, s, -1000, -1000, -1000), ConfigError);
}

TEST_CASE("matrix container") {
  Matrix<Score> m(3, 4, 7);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 4);
  m(2, 3) = 1;
  CHECK(m(2, 3) == 1);
  CHECK(m(0, 0) == 7);
  CHECK(m.bytes() >= 12 * sizeof(Score));
}

#include "opberg/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "opberg/error.hpp"
#include "opberg/naive.hpp"
#include "opberg/opberg.hpp"
#include "opberg/smith_waterman.hpp"

namespace opberg {

TokenSeq random_sequence(std::size_t length, std::size_t alphabet, Rng& rng) {
  if (alphabet == 0) throw ConfigError("alphabet size must be >= 1");
  TokenSeq seq;
  seq.ids.reserve(length);
  for (std::size_t t = 0; t < length; ++t) seq.ids.push_back(static_cast<TokenId>(rng() % alphabet));
  return seq;
}

std::pair<TokenSeq, TokenSeq> bench_pair(const BenchConfig& config, std::size_t n) {
  std::seed_seq seq{config.seed, static_cast<std::uint64_t>(n)};
  Rng rng(seq);
  TokenSeq a = random_sequence(n, config.alphabet, rng);
  TokenSeq b = random_sequence(n, config.alphabet, rng);
  return {std::move(a), std::move(b)};
}

BenchRow bench_one(Mode mode, std::size_t n, const BenchConfig& config) {
  const auto [a, b] = bench_pair(config, n);
  BenchRow row;
  row.mode = mode;
  row.n = n;
  const auto start = std::chrono::steady_clock::now();
  switch (mode) {
    case Mode::opberg: {
      const DpState st = opberg_fill(a, b, config.scheme, config.gaps, config.params);
      opberg_result(st);
      row.peak_bytes = st.bytes();
      break;
    }
    case Mode::naive: {
      const Score q = config.gaps.linear;
      const NaiveState st =
          naive_fill(a, b, config.scheme, q, effective_k_max(a, b, config.params.k_max));
      naive_result(st, a, b, config.scheme, q, config.params.jump_penalty);
      row.peak_bytes = st.bytes();
      break;
    }
    case Mode::sw: {
      smith_waterman(a, b, config.scheme, config.gaps);
      // Three score matrices plus one byte of trace per cell.
      row.peak_bytes = (n + 1) * (n + 1) * (3 * sizeof(Score) + 1);
      break;
    }
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string bench_csv_header() { return "mode,n,wall_time,peak_bytes\n"; }

std::string format_bench_row(const BenchRow& row) {
  std::ostringstream out;
  out << to_string(row.mode) << ',' << row.n << ',' << row.wall_seconds << ',' << row.peak_bytes
      << '\n';
  return out.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ConfigError("slope needs >= 2 points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += std::log(x[i]), my += std::log(y[i]);
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<SentenceRecord> synthetic_records(std::size_t count, std::size_t min_len,
                                              std::size_t max_len, std::size_t alphabet,
                                              std::uint64_t seed, const std::string& id_prefix) {
  if (min_len == 0 || max_len < min_len) throw ConfigError("bad synthetic length range");
  Rng rng(seed);
  std::vector<SentenceRecord> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    SentenceRecord rec;
    rec.id = id_prefix + std::to_string(r);
    rec.label = r % 2 == 0 ? RecordLabel::causal : RecordLabel::noncausal;
    const std::size_t len = min_len + rng() % (max_len - min_len + 1);
    for (std::size_t t = 0; t < len; ++t) rec.pos.push_back("T" + std::to_string(rng() % alphabet));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace opberg

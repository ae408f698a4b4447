#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "opberg/corpus.hpp"
#include "opberg/params.hpp"
#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg {

/// All generated data comes from std::mt19937_64; token i is rng() % alphabet.
using Rng = std::mt19937_64;

TokenSeq random_sequence(std::size_t length, std::size_t alphabet, Rng& rng);

struct BenchConfig {
  ScoringScheme scheme;
  GapModel gaps;
  OpbergParams params;
  std::size_t alphabet = 4;
  std::uint64_t seed = 42;
};

struct BenchRow {
  Mode mode = Mode::opberg;
  std::size_t n = 0;
  double wall_seconds = 0.0;
  /// Bytes held by the DP state of the call (matrices, tensors, chain arena).
  std::size_t peak_bytes = 0;
};

/// The pair of length-n sequences used for size n; depends only on (seed, n, alphabet).
std::pair<TokenSeq, TokenSeq> bench_pair(const BenchConfig& config, std::size_t n);

/// Times one full alignment (fill + traceback) of the size-n pair.
BenchRow bench_one(Mode mode, std::size_t n, const BenchConfig& config);

std::string bench_csv_header();
std::string format_bench_row(const BenchRow& row);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Labeled records with random lengths in [min_len, max_len] over tags T0..T{alphabet-1};
/// labels alternate causal / noncausal.
std::vector<SentenceRecord> synthetic_records(std::size_t count, std::size_t min_len,
                                              std::size_t max_len, std::size_t alphabet,
                                              std::uint64_t seed, const std::string& id_prefix);

}  // namespace opberg

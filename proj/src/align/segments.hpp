#pragma once

#include <span>
#include <string>
#include <vector>

#include "opberg/scoring.hpp"
#include "opberg/types.hpp"

namespace opberg::detail {

/// Builds a segment from its forward column operations ('M', 'I', 'D') and
/// end cell. Leading and trailing gap columns are trimmed.
Segment make_segment(std::size_t end_i, std::size_t end_j, std::string ops);

/// Score of a path given as expanded operations starting at (a_start, b_start).
Score rescore(std::string_view ops, std::size_t a_start, std::size_t b_start,
              std::span<const TokenId> a, std::span<const TokenId> b,
              const ScoringScheme& scheme, Score open, Score extend);

std::string compress_ops(std::string_view ops);
std::string expand_cigar(std::string_view cigar);

std::vector<Cell> transit_breakpoints(const std::vector<Segment>& segments);

}  // namespace opberg::detail

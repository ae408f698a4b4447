#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opberg/classifier.hpp"
#include "opberg/types.hpp"

namespace opberg {

enum class Emit { json, tsv };

/// Single JSON object (one line) or a small TSV table; both end with '\n'.
std::string format_alignment(const AlignmentResult& result, Emit emit);

/// Inverse of format_alignment. Throws ParseError on malformed text.
AlignmentResult parse_alignment(std::string_view text, Emit emit);

/// Structural checks every result must pass: ordered, colinear and disjoint
/// segments that start and end on an aligned pair, CIGARs consistent with
/// the coordinates, transit breakpoints, and
/// sum(segment_score) + jump_penalty * (k - 1) == total_score.
/// Returns one message per violation.
std::vector<std::string> invariant_violations(const AlignmentResult& result, Score jump_penalty);

/// One line per decision: id, label, best positive/negative id and similarity.
std::string format_decision(const std::string& id, const Decision& decision, Emit emit);
/// TSV column header matching format_decision.
std::string decision_tsv_header();

std::string format_metrics(const Metrics& metrics, Emit emit);

}  // namespace opberg

#include "align/segments.hpp"

#include <algorithm>
#include <stdexcept>

namespace opberg::detail {

Segment make_segment(std::size_t end_i, std::size_t end_j, std::string ops) {
  // Gap columns at the ends only survive ties with zero-cost gaps.
  while (!ops.empty() && ops.back() != 'M') {
    (ops.back() == 'I' ? end_i : end_j) -= 1;
    ops.pop_back();
  }
  const auto first = ops.find('M');
  ops.erase(0, first == std::string::npos ? ops.size() : first);
  if (ops.empty()) throw std::logic_error("segment without aligned columns");

  const auto in_a = static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](char c) { return c != 'D'; }));
  const auto in_b = static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](char c) { return c != 'I'; }));

  Segment seg;
  seg.a_end = end_i;
  seg.b_end = end_j;
  seg.a_start = end_i + 1 - in_a;
  seg.b_start = end_j + 1 - in_b;
  seg.cigar = compress_ops(ops);
  return seg;
}

Score rescore(std::string_view ops, std::size_t a_start, std::size_t b_start,
              std::span<const TokenId> a, std::span<const TokenId> b,
              const ScoringScheme& scheme, Score open, Score extend) {
  Score total = 0;
  std::size_t i = a_start;
  std::size_t j = b_start;
  char prev = 'M';
  for (char op : ops) {
    switch (op) {
      case 'M':
        total += scheme.score(a[i - 1], b[j - 1]);
        ++i;
        ++j;
        break;
      case 'I':
        total += extend + (prev == 'I' ? 0 : open);
        ++i;
        break;
      case 'D':
        total += extend + (prev == 'D' ? 0 : open);
        ++j;
        break;
      default:
        throw std::invalid_argument("bad alignment operation");
    }
    prev = op;
  }
  return total;
}

std::string compress_ops(std::string_view ops) {
  std::string out;
  for (std::size_t pos = 0; pos < ops.size();) {
    std::size_t run = 1;
    while (pos + run < ops.size() && ops[pos + run] == ops[pos]) ++run;
    out += std::to_string(run);
    out += ops[pos];
    pos += run;
  }
  return out;
}

std::string expand_cigar(std::string_view cigar) {
  std::string out;
  std::size_t count = 0;
  bool have_digits = false;
  for (char c : cigar) {
    if (c >= '0' && c <= '9') {
      count = count * 10 + static_cast<std::size_t>(c - '0');
      have_digits = true;
    } else {
      if (!have_digits || (c != 'M' && c != 'I' && c != 'D')) {
        throw std::invalid_argument("bad cigar '" + std::string(cigar) + "'");
      }
      out.append(count, c);
      count = 0;
      have_digits = false;
    }
  }
  if (have_digits) throw std::invalid_argument("bad cigar '" + std::string(cigar) + "'");
  return out;
}

std::vector<Cell> transit_breakpoints(const std::vector<Segment>& segments) {
  std::vector<Cell> out;
  for (std::size_t t = 0; t + 1 < segments.size(); ++t) {
    out.push_back({segments[t].a_end, segments[t].b_end});
    out.push_back({segments[t + 1].a_start, segments[t + 1].b_start});
  }
  return out;
}

}  // namespace opberg::detail

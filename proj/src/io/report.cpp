#include "opberg/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "align/segments.hpp"
#include "opberg/error.hpp"

namespace opberg {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSegmentHeader =
    "segment\ta_start\ta_end\tb_start\tb_end\tsegment_score\tscore_length\tcigar";

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T number(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

json match_json(const Match& m) {
  json j = json::object();
  j["id"] = m.source_id;
  j["similarity"] = m.similarity;
  return j;
}

json alignment_json(const AlignmentResult& r) {
  json j = json::object();
  j["mode"] = std::string(to_string(r.mode));
  j["total_score"] = r.total_score;
  j["k"] = r.k();
  json segs = json::array();
  for (const auto& s : r.segments) {
    segs.push_back(json{{"a_start", s.a_start},
                        {"a_end", s.a_end},
                        {"b_start", s.b_start},
                        {"b_end", s.b_end},
                        {"segment_score", s.segment_score},
                        {"score_length", s.score_length},
                        {"cigar", s.cigar}});
  }
  j["segments"] = std::move(segs);
  json bps = json::array();
  for (const auto& c : r.breakpoints) bps.push_back(json::array({c.i, c.j}));
  j["breakpoints"] = std::move(bps);
  return j;
}

AlignmentResult alignment_from_json(const json& j) {
  AlignmentResult r;
  const auto mode = parse_mode(j.at("mode").get<std::string>());
  if (!mode) throw ParseError(1, "unknown mode");
  r.mode = *mode;
  r.total_score = j.at("total_score").get<Score>();
  for (const auto& s : j.at("segments")) {
    Segment seg;
    seg.a_start = s.at("a_start").get<std::size_t>();
    seg.a_end = s.at("a_end").get<std::size_t>();
    seg.b_start = s.at("b_start").get<std::size_t>();
    seg.b_end = s.at("b_end").get<std::size_t>();
    seg.segment_score = s.at("segment_score").get<Score>();
    seg.score_length = s.at("score_length").get<Score>();
    seg.cigar = s.at("cigar").get<std::string>();
    r.segments.push_back(std::move(seg));
  }
  for (const auto& c : j.at("breakpoints")) {
    r.breakpoints.push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>()});
  }
  if (j.at("k").get<std::size_t>() != r.segments.size()) {
    throw ParseError(1, "k does not match the number of segments");
  }
  return r;
}

}  // namespace

std::string format_alignment(const AlignmentResult& r, Emit emit) {
  if (emit == Emit::json) return alignment_json(r).dump() + "\n";

  std::string out = "mode\ttotal_score\tk\tbreakpoints\n";
  out += std::string(to_string(r.mode)) + '\t' + std::to_string(r.total_score) + '\t' +
         std::to_string(r.k()) + '\t';
  for (std::size_t t = 0; t < r.breakpoints.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(r.breakpoints[t].i) + ':' + std::to_string(r.breakpoints[t].j);
  }
  out += '\n';
  out += kSegmentHeader;
  out += '\n';
  for (std::size_t t = 0; t < r.segments.size(); ++t) {
    const auto& s = r.segments[t];
    out += std::to_string(t + 1) + '\t' + std::to_string(s.a_start) + '\t' +
           std::to_string(s.a_end) + '\t' + std::to_string(s.b_start) + '\t' +
           std::to_string(s.b_end) + '\t' + std::to_string(s.segment_score) + '\t' +
           std::to_string(s.score_length) + '\t' + s.cigar + '\n';
  }
  return out;
}

AlignmentResult parse_alignment(std::string_view text, Emit emit) {
  if (emit == Emit::json) {
    try {
      return alignment_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(1, std::string("bad alignment report: ") + e.what());
    }
  }

  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3 || lines[0] != "mode\ttotal_score\tk\tbreakpoints" ||
      lines[2] != kSegmentHeader) {
    throw ParseError(1, "bad alignment table header");
  }
  const auto head = split(lines[1], '\t');
  if (head.size() != 4) throw ParseError(2, "expected 4 columns");
  AlignmentResult r;
  const auto mode = parse_mode(head[0]);
  if (!mode) throw ParseError(2, "unknown mode '" + head[0] + "'");
  r.mode = *mode;
  r.total_score = number<Score>(head[1], 2);
  const auto k = number<std::size_t>(head[2], 2);
  if (!head[3].empty()) {
    for (const auto& pair : split(head[3], ',')) {
      const auto ij = split(pair, ':');
      if (ij.size() != 2) throw ParseError(2, "bad breakpoint '" + pair + "'");
      r.breakpoints.push_back({number<std::size_t>(ij[0], 2), number<std::size_t>(ij[1], 2)});
    }
  }
  for (std::size_t l = 3; l < lines.size(); ++l) {
    const auto f = split(lines[l], '\t');
    if (f.size() != 8) throw ParseError(l + 1, "expected 8 columns");
    Segment s;
    s.a_start = number<std::size_t>(f[1], l + 1);
    s.a_end = number<std::size_t>(f[2], l + 1);
    s.b_start = number<std::size_t>(f[3], l + 1);
    s.b_end = number<std::size_t>(f[4], l + 1);
    s.segment_score = number<Score>(f[5], l + 1);
    s.score_length = number<Score>(f[6], l + 1);
    s.cigar = f[7];
    r.segments.push_back(std::move(s));
  }
  if (k != r.segments.size()) throw ParseError(2, "k does not match the number of segments");
  return r;
}

std::vector<std::string> invariant_violations(const AlignmentResult& r, Score jump_penalty) {
  std::vector<std::string> bad;
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < r.segments.size(); ++t) {
    const auto& s = r.segments[t];
    const std::string where = "segment " + std::to_string(t + 1) + ": ";
    sum += s.segment_score;
    if (s.a_start < 1 || s.b_start < 1 || s.a_start > s.a_end || s.b_start > s.b_end) {
      bad.push_back(where + "bad coordinates");
    }
    std::string ops;
    try {
      ops = detail::expand_cigar(s.cigar);
    } catch (const std::exception&) {
      bad.push_back(where + "bad cigar '" + s.cigar + "'");
      continue;
    }
    if (ops.empty() || ops.front() != 'M' || ops.back() != 'M') {
      bad.push_back(where + "does not start and end on an aligned pair");
    }
    std::size_t in_a = 0, in_b = 0;
    for (char c : ops) {
      in_a += c != 'D';
      in_b += c != 'I';
    }
    if (s.a_end + 1 != s.a_start + in_a || s.b_end + 1 != s.b_start + in_b) {
      bad.push_back(where + "cigar length disagrees with coordinates");
    }
    if (t > 0) {
      const auto& p = r.segments[t - 1];
      if (!(p.a_end < s.a_start && p.b_end < s.b_start)) {
        bad.push_back(where + "overlaps or crosses the previous segment");
      }
    }
  }
  if (r.breakpoints != detail::transit_breakpoints(r.segments)) {
    bad.push_back("breakpoints are not the segment transits");
  }
  if (!r.segments.empty()) sum += std::int64_t{jump_penalty} * static_cast<std::int64_t>(r.k() - 1);
  if (sum != r.total_score) {
    bad.push_back("segment scores plus jump penalties give " + std::to_string(sum) +
                  ", total is " + std::to_string(r.total_score));
  }
  return bad;
}

std::string decision_tsv_header() {
  return "id\tlabel\tbest_positive\tpositive_similarity\tbest_negative\tnegative_similarity\n";
}

std::string format_decision(const std::string& id, const Decision& d, Emit emit) {
  if (emit == Emit::tsv) {
    return id + '\t' + std::string(to_string(d.label)) + '\t' + d.best_positive.source_id + '\t' +
           format_double(d.best_positive.similarity) + '\t' + d.best_negative.source_id + '\t' +
           format_double(d.best_negative.similarity) + '\n';
  }
  json j = json::object();
  j["id"] = id;
  j["label"] = std::string(to_string(d.label));
  j["best_positive"] = match_json(d.best_positive);
  j["best_negative"] = match_json(d.best_negative);
  j["evidence"] = alignment_json(d.evidence);
  return j.dump() + "\n";
}

std::string format_metrics(const Metrics& m, Emit emit) {
  if (emit == Emit::json) {
    json j = json::object();
    j["true_positive"] = m.true_positive;
    j["false_positive"] = m.false_positive;
    j["true_negative"] = m.true_negative;
    j["false_negative"] = m.false_negative;
    j["abstained"] = m.abstained;
    j["precision"] = m.precision();
    j["recall"] = m.recall();
    j["f1"] = m.f1();
    j["accuracy"] = m.accuracy();
    return j.dump() + "\n";
  }
  std::string out = "metric\tvalue\n";
  out += "true_positive\t" + std::to_string(m.true_positive) + '\n';
  out += "false_positive\t" + std::to_string(m.false_positive) + '\n';
  out += "true_negative\t" + std::to_string(m.true_negative) + '\n';
  out += "false_negative\t" + std::to_string(m.false_negative) + '\n';
  out += "abstained\t" + std::to_string(m.abstained) + '\n';
  out += "precision\t" + format_double(m.precision()) + '\n';
  out += "recall\t" + format_double(m.recall()) + '\n';
  out += "f1\t" + format_double(m.f1()) + '\n';
  out += "accuracy\t" + format_double(m.accuracy()) + '\n';
  return out;
}

}  // namespace opberg

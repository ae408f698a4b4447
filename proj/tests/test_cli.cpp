#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "opberg/bench.hpp"
#include "opberg/cli.hpp"
#include "opberg/corpus.hpp"
#include "opberg/report.hpp"

using namespace opberg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("opberg-cli-" + std::to_string(std::hash<std::string>{}(
                                 std::to_string(reinterpret_cast<std::uintptr_t>(this)))));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

const char* kTrain =
    R"({"id":"p1","label":"causal","pos":["NN","VBZ","NN"]})"
    "\n"
    R"({"id":"p2","label":"causal","pos":["NN","VBD","IN","NN"]})"
    "\n"
    R"({"id":"n1","label":"noncausal","pos":["DT","JJ","NN"]})"
    "\n"
    R"({"id":"n2","label":"noncausal","pos":["PRP","VBP","DT","NN"]})"
    "\n";

}  // namespace

TEST_CASE("align perfect match") {
  const auto r = run({"align", "--mode", "sw", "--a", "A,B,C", "--b", "A,B,C", "--match", "2",
                      "--mismatch", "-1"});
  CHECK(r.code == 0);
  const auto res = parse_alignment(r.out, Emit::json);
  CHECK(res.total_score == 6);
  CHECK(res.k() == 1);
  CHECK(res.mode == Mode::sw);
}

TEST_CASE("align the two-segment instance") {
  const std::vector<std::string> args{"align", "--mode", "opberg", "--a", "A,A,C,C", "--b",
                                      "A,A,B,B,B,C,C", "--gap-open", "0", "--gap-extend", "-1",
                                      "--jump-penalty", "-1", "--alpha", "inf", "--beta", "-inf",
                                      "--gamma", "identity"};
  const auto r = run(args);
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        R"({"mode":"opberg","total_score":7,"k":2,"segments":[{"a_start":1,"a_end":2,"b_start":1,"b_end":2,"segment_score":4,"score_length":4,"cigar":"2M"},{"a_start":3,"a_end":4,"b_start":6,"b_end":7,"segment_score":4,"score_length":4,"cigar":"2M"}],"breakpoints":[[2,2],[3,6]]})"
        "\n");
  auto tsv_args = args;
  tsv_args.insert(tsv_args.end(), {"--emit", "tsv"});
  const auto t = run(tsv_args);
  CHECK(parse_alignment(t.out, Emit::tsv) == parse_alignment(r.out, Emit::json));
}

TEST_CASE("align with an empty sequence") {
  const auto r = run({"align", "--a", "A", "--b", ""});
  CHECK(r.code == 0);
  const auto res = parse_alignment(r.out, Emit::json);
  CHECK(res.total_score == 0);
  CHECK(res.segments.empty());
}

TEST_CASE("emitted reports re-parse into valid results") {
  const char* pairs[][2] = {{"A,B,C,D,E,F", "A,B,X,D,E,F"},
                            {"N,V,D,N,P,N,V", "N,V,N,P,D,N"},
                            {"A,A,A,B,B,B", "B,B,B,A,A,A"}};
  for (const char* mode : {"sw", "naive", "opberg"}) {
    for (const auto& pair : pairs) {
      for (const char* emit : {"json", "tsv"}) {
        const auto r = run({"align", "--mode", mode, "--a", pair[0], "--b", pair[1], "--emit",
                            emit, "--jump-penalty", "-1", "--beta", "0"});
        REQUIRE(r.code == 0);
        const auto res = parse_alignment(r.out, std::string(emit) == "json" ? Emit::json : Emit::tsv);
        CHECK(invariant_violations(res, std::string(mode) == "sw" ? 0 : -1).empty());
        CHECK(format_alignment(res, std::string(emit) == "json" ? Emit::json : Emit::tsv) == r.out);
      }
    }
  }
}

TEST_CASE("matrix file and alphabet mismatch") {
  TempDir dir;
  const auto matrix = dir.write("m.txt", "# demo\n  A  B\nA 3 -1\nB -1 2\n");
  auto r = run({"align", "--mode", "sw", "--matrix", matrix, "--a", "A,B", "--b", "A,B"});
  CHECK(r.code == 0);
  CHECK(parse_alignment(r.out, Emit::json).total_score == 5);
  r = run({"align", "--matrix", matrix, "--a", "A,Z", "--b", "A"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("usage errors exit 2, data errors exit 1") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"align", "--mode", "fast"}).code == 2);
  CHECK(run({"align", "--alpha", "lots"}).code == 2);
  CHECK(run({"align", "--gamma", "cubic"}).code == 2);
  CHECK(run({"align", "--match", "two"}).code == 2);
  CHECK(run({"classify", "--train", "x"}).code == 2);
  CHECK(run({"align", "--a", "A", "--b", "A", "--jump-penalty", "5"}).code == 1);
  CHECK(run({"align", "--a", "A", "--b", "A", "--alpha", "-1"}).code == 1);
  CHECK(run({"align", "--a", "A,,B", "--b", "A"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("align") != std::string::npos);
}

TEST_CASE("align records from a corpus") {
  TempDir dir;
  const auto corpus = dir.write("c.jsonl", kTrain);
  const auto r = run({"align", "--input", corpus, "--a", "p1", "--b", "p2", "--beta", "0"});
  REQUIRE(r.code == 0);
  CHECK(parse_alignment(r.out, Emit::json).total_score > 0);
  CHECK(run({"align", "--input", corpus, "--a", "p1", "--b", "nope"}).code == 1);
}

TEST_CASE("classify") {
  TempDir dir;
  const auto train = dir.write("train.jsonl", kTrain);
  const auto input = dir.write(
      "in.jsonl",
      R"({"id":"q1","pos":["NN","VBZ","NN"]})"
      "\n"
      R"({"id":"q2","pos":["XX","YY"]})"
      "\n"
      R"({"id":"q3","pos":["DT","JJ","NN"]})"
      "\n");
  const std::vector<std::string> base{"classify", "--train", train, "--input", input, "--alpha",
                                      "inf", "--beta", "-inf", "--gamma", "identity",
                                      "--jump-penalty", "0"};
  auto r = run(base);
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["id"] == "q1");
  CHECK(rows[0]["label"] == "causal");
  CHECK(rows[0]["best_positive"]["id"] == "p1");
  CHECK(rows[0]["best_positive"]["similarity"] == 2.0);
  CHECK(rows[1]["label"] == "noncausal");
  CHECK(rows[2]["label"] == "noncausal");
  CHECK(rows[2]["best_negative"]["id"] == "n1");

  auto tsv = base;
  tsv.insert(tsv.end(), {"--emit", "tsv", "--delta", "0.5"});
  r = run(tsv);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind(decision_tsv_header(), 0) == 0);
  CHECK(r.out.find("q1\tcausal\tp1\t2\t") != std::string::npos);

  // Training data without negatives.
  const auto only_pos = dir.write("pos.jsonl", R"({"id":"p","label":"causal","pos":["NN"]})" "\n");
  CHECK(run({"classify", "--train", only_pos, "--input", input}).code == 1);
  CHECK(run({"classify", "--train", train, "--input", "/nonexistent"}).code == 1);
}

TEST_CASE("classify output does not depend on the thread count") {
  TempDir dir;
  std::ostringstream train, input;
  write_corpus(train, synthetic_records(40, 3, 12, 6, 1, "t"));
  auto in_records = synthetic_records(200, 2, 14, 6, 2, "q");
  for (auto& r : in_records) r.label = RecordLabel::unlabeled;
  write_corpus(input, in_records);
  const auto tp = dir.write("t.jsonl", train.str());
  const auto ip = dir.write("i.jsonl", input.str());
  const auto one = run({"classify", "--train", tp, "--input", ip, "--threads", "1"});
  const auto eight = run({"classify", "--train", tp, "--input", ip, "--threads", "8"});
  REQUIRE(one.code == 0);
  CHECK(one.out == eight.out);
}

TEST_CASE("eval") {
  TempDir dir;
  const auto train = dir.write("train.jsonl", kTrain);
  const std::vector<std::string> literal{"--alpha", "inf", "--beta", "-inf", "--gamma", "identity",
                                         "--jump-penalty", "0", "--delta", "-inf"};
  auto args = std::vector<std::string>{"eval", "--train", train, "--test", train};
  args.insert(args.end(), literal.begin(), literal.end());
  auto r = run(args);
  REQUIRE(r.code == 0);
  const auto m = nlohmann::json::parse(r.out);
  CHECK(m["accuracy"] == 1.0);
  CHECK(m["true_positive"] == 2);

  args.insert(args.end(), {"--emit", "tsv"});
  r = run(args);
  CHECK(r.out.find("accuracy\t1\n") != std::string::npos);

  const auto empty = dir.write("empty.jsonl", "");
  CHECK(run({"eval", "--train", train, "--test", empty}).code == 1);
  const auto unlabeled = dir.write("u.jsonl", R"({"id":"u","pos":["NN"]})" "\n");
  CHECK(run({"eval", "--train", train, "--test", unlabeled}).code == 1);

  const auto far = dir.write("far.jsonl",
                             R"({"id":"f1","label":"causal","pos":["Q1","Q2"]})"
                             "\n"
                             R"({"id":"f2","label":"noncausal","pos":["Q3"]})"
                             "\n");
  r = run({"eval", "--train", train, "--test", far, "--delta", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["recall"] == 0.0);
}

TEST_CASE("bench") {
  const auto a = run({"bench", "--modes", "sw,naive,opberg", "--sizes", "16,32", "--seed", "9"});
  REQUIRE(a.code == 0);
  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "mode,n,wall_time,peak_bytes");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 6);
  CHECK(run({"bench", "--sizes", "0"}).code == 1);
  CHECK(run({"bench", "--modes", "quantum"}).code == 1);

  BenchConfig config;
  config.seed = 9;
  const auto p1 = bench_pair(config, 50);
  const auto p2 = bench_pair(config, 50);
  CHECK(p1.first.ids == p2.first.ids);
  CHECK(p1.second.ids == p2.second.ids);
  config.seed = 10;
  CHECK(bench_pair(config, 50).first.ids != p1.first.ids);
  CHECK(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}) == doctest::Approx(2.0));
}

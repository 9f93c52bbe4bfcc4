#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "pdclass/cli.hpp"
#include "pdclass/error.hpp"
#include "pdclass/report.hpp"

using namespace pdclass;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pdclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInconsistency;
}

}  // namespace

TEST_CASE("parse_domain_spec") {
  const auto d = parse_domain_spec("C2/1,1");
  CHECK(d.type_label == 'C');
  CHECK(d.rank == 2);
  CHECK(d.labels == std::vector<int>{1, 1});
  CHECK(parse_domain_spec("F4/0,0,0,1").labels == std::vector<int>{0, 0, 0, 1});
  CHECK(code_of([] { parse_domain_spec("X9/1"); }) == ErrorCode::kInvalidTypeRank);
  CHECK(code_of([] { parse_domain_spec("D3/1,1,1"); }) == ErrorCode::kInvalidTypeRank);
  CHECK(code_of([] { parse_domain_spec("C2/1"); }) == ErrorCode::kLabelOutOfRange);
  CHECK(code_of([] { parse_domain_spec("C2-1,1"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_domain_spec("C2/1,,1"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_domain_spec("c2/1,1"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_domain_spec(""); }) == ErrorCode::kParseError);
}

TEST_CASE("parse errors carry the position") {
  try {
    parse_domain_spec("C2/1;1");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("parse_weight") {
  const auto w = parse_weight("1/2,-3", 2);
  CHECK(w.coordinates == RationalVector{Rational(1, 2), Rational(-3)});
  CHECK(code_of([] { parse_weight("1,2,3", 2); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_weight("1/0,2", 2); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_weight("a,2", 2); }) == ErrorCode::kParseError);
}

TEST_CASE("parse_types") {
  CHECK(parse_types("A,B,C") == std::vector<char>{'A', 'B', 'C'});
  CHECK(parse_types("GF") == std::vector<char>{'G', 'F'});
  CHECK(code_of([] { parse_types("Z"); }) == ErrorCode::kParseError);
}

TEST_CASE("config files and flag precedence") {
  CommandRequest req;
  apply_config(req, "# survey\ntypes = C,G\nmax_rank=2\noracle_radius=2\nformat=csv\n");
  CHECK(req.types == std::vector<char>{'C', 'G'});
  CHECK(req.max_rank == 2);
  CHECK(req.radius == 2);
  CHECK(req.format == OutputFormat::kCsv);

  CommandRequest kept;
  apply_config(kept, "format=json\nmax_rank=3\n", {"format"});
  CHECK(kept.format == OutputFormat::kText);
  CHECK(kept.max_rank == 3);

  CHECK(code_of([] {
          CommandRequest r;
          apply_config(r, "bogus=1\n");
        }) == ErrorCode::kParseError);
  CHECK(code_of([] {
          CommandRequest r;
          apply_config(r, "max_rank\n");
        }) == ErrorCode::kParseError);

  const std::string path = "pdclass_test_config.txt";
  {
    std::ofstream f(path);
    f << "types=C\nmax_rank=2\nformat=json\n";
  }
  const auto r = run({"survey", "--config", path, "--format", "csv"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("type,rank,labels,classical,hermitian,m0,dim_D\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("classify C2/1,1 --format json") {
  const auto r = run({"classify", "C2/1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["flags"]["classical"] == false);
  CHECK(j["dims"]["m0"] == 3);
  CHECK(j["witnesses"]["nonclassical_pair"] == nlohmann::json::parse("[[1,0],[0,1]]"));
  CHECK(j["schema_version"] == kReportSchemaVersion);
}

TEST_CASE("JSON reports round-trip") {
  for (const char* spec : {"C2/1,1", "C2/0,1", "A1/1", "G2/1,0", "F4/1,0,0,2"}) {
    CAPTURE(spec);
    const auto d = parse_domain_spec(spec);
    const auto report = classify(make_grading(d.type_label, d.rank, d.labels));
    const auto j = report_to_json(report);
    const auto parsed = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(report_to_json(parsed.report) == j);
    CHECK(parsed.report.classical == report.classical);
    CHECK(parsed.report.witness_classical == report.witness_classical);
    CHECK(parsed.report.closure_trace == report.closure_trace);
  }
  CHECK(code_of([] { report_from_json(nlohmann::json::parse("{\"schema_version\": 1}")); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("structures JSON round-trips its structure section") {
  const auto r = run({"structures", "C2/1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto parsed = report_from_json(nlohmann::json::parse(r.out));
  REQUIRE(parsed.structure);
  CHECK(parsed.structure->S.size() == 4);
  CHECK(parsed.structure->positive_system_simples.size() == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["structure"]["n_structures"] == 8);
}

TEST_CASE("curvature C2/1,1 --weight 1,0") {
  const auto r = run({"curvature", "C2/1,1", "--weight", "1,0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("signature: (1,1,2)") != std::string::npos);
  CHECK(r.out.find("q: 2") != std::string::npos);
  CHECK(r.out.find("predicts_vanishing: true") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto bad = run({"classify", "X9/1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("INVALID_TYPE_RANK") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"curvature", "C2/1,1"}).code == 1);
  CHECK(run({"curvature", "C2/1,1", "--weight", "1"}).code == 1);
  CHECK(run({"classify", "A1/0"}).code == 1);
  CHECK(run({"classify", "C2/1,1", "--format", "yaml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("structures on a non-Hermitian domain falls back to the original") {
  const auto r = run({"structures", "G2/1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hermitian_splitting: none") != std::string::npos);
}

TEST_CASE("verify suites pass") {
  const auto lemmas = run({"verify", "--suite", "lemmas", "--types", "A,C,G", "--max-rank", "3"});
  CHECK(lemmas.code == 0);
  CHECK(lemmas.out.find("FAIL") == std::string::npos);
  const auto eq = run({"verify", "--suite", "equivalence", "--types", "B", "--max-rank", "3"});
  CHECK(eq.code == 0);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "pdclass_test_out.json";
  const auto r = run({"classify", "C2/1,1", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::remove(path.c_str());
  CHECK(nlohmann::json::parse(text.str())["domain"]["type"] == "C");
}

TEST_CASE("outputs are byte-deterministic across job counts") {
  const auto a = run({"survey", "--format", "csv", "--jobs", "1"});
  const auto b = run({"survey", "--format", "csv", "--jobs", "6"});
  const auto c = run({"survey", "--format", "json", "--jobs", "0"});
  const auto d = run({"survey", "--format", "json", "--jobs", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(c.out == d.out);
}

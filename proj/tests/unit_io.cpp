#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/cli.hpp"
#include "polyhodge/io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace polyhodge;

namespace {

const char* kCross2 =
    R"({"dimension": 2, "vertices": [[1,0],[-1,0],[0,1],[0,-1]],)"
    R"( "facets": [[0,2],[2,1],[1,3],[3,0]]})";

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/polyhodge_io_" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("weight shorthand input") {
  LoadedInput input = parse_polytope_document(R"({"weights": [5, 3, 2]})");
  REQUIRE(input.weights.has_value());
  CHECK(*input.weights == std::vector<Int>{2, 3, 5});
  REQUIRE(input.vertex_weights.has_value());
  CHECK(normalized_volume(input.polytope) == 10);
  CHECK(input.polytope.validated);
}

TEST_CASE("explicit simplex input infers facets") {
  LoadedInput input = parse_polytope_document(
      R"({"dimension": 2, "vertices": [[-1,-1],[1,0],[0,1]]})");
  CHECK_FALSE(input.weights.has_value());
  REQUIRE(input.vertex_weights.has_value());
  CHECK(*input.vertex_weights == std::vector<Int>{1, 1, 1});
  CHECK(input.polytope.facets.size() == 3);
}

TEST_CASE("explicit facet input") {
  LoadedInput input = parse_polytope_document(kCross2);
  CHECK_FALSE(input.weights.has_value());
  CHECK_FALSE(input.vertex_weights.has_value());
  CHECK(normalized_volume(input.polytope) == 4);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_polytope_document("{"), ParseError);
  CHECK_THROWS_AS(parse_polytope_document("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_polytope_document(R"({"vertices": [[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_document(R"({"dimension": 2, "vertices": [[1,0],[0,1],[-1]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_polytope_document(
          R"({"dimension": 2, "vertices": [[1,0],[0,1],[-1,-1]], "facets": [[0,3]]})"),
      ParseError);
  CHECK_THROWS_AS(parse_polytope_document(R"({"weights": [0, 1]})"), ParseError);
  CHECK_THROWS_AS(parse_polytope_document(R"({"weights": [3]})"), ParseError);
  // Four vertices in the plane cannot be a simplex, so facets are mandatory.
  CHECK_THROWS_AS(
      parse_polytope_document(R"({"dimension": 2, "vertices": [[1,0],[-1,0],[0,1],[0,-1]]})"),
      ParseError);
  // Well-formed but geometrically invalid: origin on the boundary.
  CHECK_THROWS_AS(parse_polytope_document(
                      R"({"dimension": 2, "vertices": [[0,0],[1,0],[0,1]]})"),
                  ValidationError);
}

TEST_CASE("load_polytope") {
  CHECK_THROWS_AS(load_polytope("/tmp/polyhodge_io_does_not_exist.json"), ParseError);
  std::string path = write_temp("cross2.json", kCross2);
  LoadedInput input = load_polytope(path);
  CHECK(normalized_volume(input.polytope) == 4);
  std::remove(path.c_str());
}

TEST_CASE("sector document in weight mode") {
  LoadedInput input = input_from_weights({1, 2, 2, 3, 3, 3});
  auto sectors = enumerate_sectors(input.polytope);
  SectorDocument doc = make_sector_document(input, sectors);

  CHECK(doc.n == 5);
  CHECK(doc.mu == 14);
  REQUIRE(doc.rows.size() == 4);
  CHECK(doc.rows[0].label == "0");
  CHECK(doc.rows[1].label == "1/3");
  CHECK(doc.rows[2].label == "1/2");
  CHECK(doc.rows[3].label == "2/3");
  CHECK(doc.rows[1].age == Rational(4, 3));
  CHECK(doc.rows[2].age == Rational(2));
  CHECK(doc.rows[3].age == Rational(5, 3));
  CHECK(doc.rows[1].inverse == 3);
  CHECK(doc.rows[2].inverse == 2);
  CHECK(doc.rows[1].betti == std::vector<long long>{1, 1, 1});
  REQUIRE(doc.age_order.has_value());
  CHECK(*doc.age_order == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("sector document in polytope mode") {
  LoadedInput input = parse_polytope_document(kCross2);
  auto sectors = enumerate_sectors(input.polytope);
  SectorDocument doc = make_sector_document(input, sectors);
  REQUIRE(doc.rows.size() == 1);
  CHECK(doc.rows[0].label == "0");
  CHECK(doc.rows[0].betti == std::vector<long long>{1, 2, 1});
  CHECK_FALSE(doc.age_order.has_value());
}

TEST_CASE("sector JSON round trip") {
  LoadedInput input = input_from_weights({1, 2, 2, 3, 3, 3});
  auto sectors = enumerate_sectors(input.polytope);
  std::string once = emit_sectors(make_sector_document(input, sectors), Format::Json);
  std::string twice = emit_sectors(parse_sectors_json(once), Format::Json);
  CHECK(once == twice);
}

TEST_CASE("hodge JSON round trip with witness") {
  LoadedInput input = input_from_weights({1, 2, 3, 4, 7, 11});
  auto sectors = enumerate_sectors(input.polytope);
  HodgeDocument doc = make_hodge_document(input, sectors);
  CHECK_FALSE(doc.hodge_tate);
  CHECK_FALSE(doc.hard_lefschetz);
  REQUIRE(doc.witness_label.has_value());
  CHECK(*doc.witness_label == "10/11");
  CHECK(*doc.witness_age == Rational(17, 11));
  CHECK(*doc.witness_inverse_age == Rational(38, 11));

  std::string once = emit_hodge(doc, Format::Json);
  std::string twice = emit_hodge(parse_hodge_json(once), Format::Json);
  CHECK(once == twice);
}

TEST_CASE("hodge JSON round trip without witness") {
  LoadedInput input = input_from_weights({1, 2, 2, 3, 3, 3});
  auto sectors = enumerate_sectors(input.polytope);
  HodgeDocument doc = make_hodge_document(input, sectors);
  CHECK(doc.hodge_tate);
  CHECK(doc.hard_lefschetz);
  CHECK_FALSE(doc.witness_label.has_value());

  std::string once = emit_hodge(doc, Format::Json);
  std::string twice = emit_hodge(parse_hodge_json(once), Format::Json);
  CHECK(once == twice);
}

TEST_CASE("spectrum JSON round trip") {
  LoadedInput input = input_from_weights({1, 2, 2, 3, 3, 3});
  SpectrumDocument doc{spectrum(enumerate_sectors(input.polytope))};
  std::string once = emit_spectrum(doc, Format::Json);
  std::string twice = emit_spectrum(parse_spectrum_json(once), Format::Json);
  CHECK(once == twice);

  CHECK_THROWS_AS(parse_spectrum_json(R"({"values": ["0", "1"], "mu": 3})"), ParseError);
  CHECK_THROWS_AS(parse_spectrum_json(R"({"values": ["1", "0"], "mu": 2})"), ParseError);
}

TEST_CASE("empty spectrum renders as the empty set") {
  SpectrumDocument empty;
  CHECK(emit_spectrum(empty, Format::Text) == "{}\n");
  CHECK(emit_spectrum(empty, Format::Json) == "{}\n");
  CHECK(emit_spectrum(empty, Format::Latex) == "{}\n");
  CHECK(parse_spectrum_json("{}").values.values.empty());
}

TEST_CASE("format_point") {
  CHECK(format_point({Int(1), Int(-2)}) == "(1,-2)");
  CHECK(format_point({Int(0)}) == "(0)");
}

TEST_CASE("emit_check formats") {
  CheckReport report;
  report.items.push_back({"alpha", true, ""});
  report.items.push_back({"beta", false, "boom \"quoted\""});
  report.pass = false;

  std::string text = emit_check(report, Format::Text);
  CHECK(text.find("ok alpha\n") != std::string::npos);
  CHECK(text.find("FAIL beta: boom \"quoted\"\n") != std::string::npos);
  CHECK(text.find("result: fail\n") != std::string::npos);

  std::string json = emit_check(report, Format::Json);
  CHECK(json.find("\"name\": \"alpha\"") != std::string::npos);
  CHECK(json.find("\"detail\": \"boom \\\"quoted\\\"\"") != std::string::npos);
  CHECK(json.find("\"pass\": false") != std::string::npos);

  std::string latex = emit_check(report, Format::Latex);
  CHECK(latex.find("\\text{alpha} & \\text{ok}") != std::string::npos);
  CHECK(latex.find("% result: fail") != std::string::npos);
}

TEST_CASE("argument parsing") {
  RunConfig c = parse_args({"hodge", "--weights", "1,2,2,3,3,3", "--format", "json"});
  CHECK(c.command == Command::Hodge);
  REQUIRE(c.weights.has_value());
  CHECK(c.weights->size() == 6);
  CHECK(c.format == Format::Json);
  CHECK_FALSE(c.output_path.has_value());

  RunConfig c2 = parse_args({"check", "--polytope", "in.json", "--output", "out.txt"});
  CHECK(c2.command == Command::Check);
  CHECK(c2.polytope_path == "in.json");
  CHECK(c2.output_path == "out.txt");
  CHECK(c2.format == Format::Text);

  CHECK_THROWS_AS(parse_args({"frobnicate", "--weights", "1,2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "1,2", "--polytope", "x.json"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "1,2", "--format", "yaml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "0,2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "1,x"}), UsageError);
  CHECK_THROWS_AS(parse_args({"hodge", "--weights", "1,2", "--bogus"}), UsageError);
}

TEST_CASE("run_command exit codes") {
  RunConfig ok;
  ok.command = Command::Hodge;
  ok.weights = std::vector<Int>{1, 2, 2, 3, 3, 3};
  ok.format = Format::Json;
  RunResult r = run_command(ok);
  CHECK(r.exit_code == kExitOk);
  CHECK_FALSE(r.output.empty());
  CHECK(r.output.back() == '\n');
  CHECK(r.diagnostics.empty());

  RunConfig both = ok;
  both.polytope_path = "x.json";
  CHECK(run_command(both).exit_code == kExitUsage);

  RunConfig neither;
  neither.command = Command::Sectors;
  CHECK(run_command(neither).exit_code == kExitUsage);

  RunConfig missing;
  missing.command = Command::Sectors;
  missing.polytope_path = "/tmp/polyhodge_io_missing.json";
  RunResult rm = run_command(missing);
  CHECK(rm.exit_code == kExitParse);
  CHECK(rm.diagnostics.find("parse error") != std::string::npos);

  std::string bad = write_temp("bad_origin.json",
                               R"({"dimension": 2, "vertices": [[1,1],[2,1],[1,2]]})");
  RunConfig invalid;
  invalid.command = Command::Sectors;
  invalid.polytope_path = bad;
  CHECK(run_command(invalid).exit_code == kExitValidation);
  std::remove(bad.c_str());

  RunConfig check;
  check.command = Command::Check;
  check.weights = std::vector<Int>{1, 2, 2, 3, 3, 3};
  RunResult rc = run_command(check);
  CHECK(rc.exit_code == kExitOk);
  CHECK(rc.output.find("result: pass") != std::string::npos);
}

TEST_CASE("latex and text renderings are stable") {
  LoadedInput input = input_from_weights({1, 2, 2, 3, 3, 3});
  auto sectors = enumerate_sectors(input.polytope);
  for (Format f : {Format::Text, Format::Json, Format::Latex}) {
    CHECK(emit_sectors(make_sector_document(input, sectors), f) ==
          emit_sectors(make_sector_document(input, sectors), f));
    CHECK(emit_hodge(make_hodge_document(input, sectors), f) ==
          emit_hodge(make_hodge_document(input, sectors), f));
  }
  std::string text = emit_sectors(make_sector_document(input, sectors), Format::Text);
  CHECK(text.find("age order:") != std::string::npos);
  CHECK(text.find("1/3") != std::string::npos);
  std::string latex = emit_spectrum(SpectrumDocument{spectrum(sectors)}, Format::Latex);
  CHECK(latex.find("\\tfrac{4}{3}") != std::string::npos);
}

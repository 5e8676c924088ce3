#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "steiner/io.hpp"

using namespace steiner;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("steiner_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("generate | verify") {
  const auto gen = run({"generate", "--system", "s4_8"});
  REQUIRE(gen.code == cli::kOk);
  CHECK(parse_text(gen.out).size() == 14);
  const auto ver = run({"verify", "-"}, gen.out);
  CHECK(ver.code == cli::kOk);
  CHECK(ver.out.find("is_steiner true") != std::string::npos);

  const auto gen12 = run({"generate", "--system", "s6_12", "--format", "json"});
  CHECK(design_from_json(gen12.out).size() == 132);
  const auto ver12 = run({"verify", "-", "--format", "json"}, gen12.out);
  CHECK(ver12.code == cli::kOk);
  CHECK(verification_report_from_json(ver12.out).is_steiner);
}

TEST_CASE("generate --trace") {
  const auto text = run({"generate", "--system", "s6_12", "--trace"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("stage 1 2\n") != std::string::npos);
  CHECK(text.out.find("stage 2 60\n") != std::string::npos);
  CHECK(text.out.find("stage 3a 40\n") != std::string::npos);
  CHECK(text.out.find("stage 3b 30\n") != std::string::npos);

  const auto json = run({"generate", "--system", "s6_12", "--trace", "--format", "json"});
  const auto trace = stage_trace_from_json(json.out);
  CHECK(trace.stage2_count() == 60);
  CHECK(trace.stage3b_count() == 30);
}

TEST_CASE("generate is byte-stable") {
  for (const char* system : {"s4_8", "s6_12"}) {
    CHECK(run({"generate", "--system", system}).out == run({"generate", "--system", system}).out);
  }
  const auto path = std::filesystem::temp_directory_path() / "steiner_cli_test_out.txt";
  CHECK(run({"generate", "--system", "s4_8", "-o", path.string()}).code == cli::kOk);
  std::ifstream f(path, std::ios::binary);
  const std::string written{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  CHECK(written == run({"generate", "--system", "s4_8"}).out);
  CHECK(written.back() == '\n');
}

TEST_CASE("verify failure and input errors") {
  const std::string s8 = run({"generate", "--system", "s4_8"}).out;
  const std::string broken = s8.substr(0, s8.rfind("5 6 7 8"));
  CHECK(run({"verify", "-"}, broken).code == cli::kPropertyFailure);
  CHECK(run({"verify", "-"}, "garbage\n").code == cli::kInputError);
  CHECK(run({"verify", "/nonexistent/file"}).code == cli::kInputError);
  CHECK(run({"bogus"}).code == cli::kInputError);
  CHECK(run({"generate", "--system", "s5_10"}).code == cli::kInputError);
}

TEST_CASE("derive and spectrum") {
  const std::string s8 = run({"generate", "--system", "s4_8"}).out;
  const auto fano = run({"derive", "-", "--point", "1"}, s8);
  REQUIRE(fano.code == cli::kOk);
  CHECK(parse_text(fano.out).params() == DesignParams{2, 3, 7});
  CHECK(run({"verify", "-"}, fano.out).code == cli::kOk);
  CHECK(run({"derive", "-", "--point", "9"}, s8).code == cli::kInputError);

  const auto spec = run({"spectrum", "-"}, s8);
  CHECK(spec.out == "0 7\n2 84\n");
  const auto spec_json = run({"spectrum", "-", "--format", "json"}, s8);
  CHECK(spectrum_from_json(spec_json.out).total_pairs() == 91);
}

TEST_CASE("color modes") {
  const std::string s12 = run({"generate", "--system", "s6_12"}).out;
  const auto design_path = temp_file("s12.txt", s12);
  const auto lemma = run({"color", design_path.string(), "--lemma1"});
  REQUIRE(lemma.code == cli::kOk);
  CHECK(lemma.out.size() == 13);
  const auto coloring_path = temp_file("lemma1.txt", lemma.out);
  const auto check = run({"color", design_path.string(), "--check", coloring_path.string()});
  CHECK(check.code == cli::kOk);
  CHECK(check.out.rfind("proper true", 0) == 0);

  const auto mono = run({"color", design_path.string(), "--check", "-"}, "BBBBBBBBBBBB\n");
  CHECK(mono.code == cli::kPropertyFailure);

  const std::string s8 = run({"generate", "--system", "s4_8"}).out;
  const auto count = run({"color", "-", "--count", "--format", "json"}, s8);
  CHECK(census_from_json(count.out).by_red_count.at(4) == 56);

  CHECK(run({"color", "-"}, s8).code == cli::kInputError);
  CHECK(run({"color", "-", "--lemma1", "--count"}, s8).code == cli::kInputError);
}

TEST_CASE("isomorphic and oracle-build") {
  const auto s8 = temp_file("s8.txt", run({"generate", "--system", "s4_8"}).out);
  const auto oracle = run({"oracle-build", "--params", "3,4,8"});
  REQUIRE(oracle.code == cli::kOk);
  const auto oracle_path = temp_file("oracle8.txt", oracle.out);
  const auto iso = run({"isomorphic", oracle_path.string(), s8.string()});
  CHECK(iso.code == cli::kOk);
  CHECK(iso.out.find("1->") == 0);

  const auto fano = temp_file("fano.txt", run({"derive", s8.string(), "--point", "1"}).out);
  const auto none = run({"isomorphic", fano.string(), s8.string()});
  CHECK(none.code == cli::kPropertyFailure);
  CHECK(none.out == "NONE\n");

  CHECK(run({"oracle-build", "--params", "2,3,8"}).code == cli::kPropertyFailure);
  CHECK(run({"oracle-build", "--params", "3,4,10", "--max-solutions", "100000000", "--budget", "0.001"}).code ==
        cli::kTimeout);
  CHECK(run({"oracle-build", "--params", "3,4"}).code == cli::kInputError);

  const auto many = run({"oracle-build", "--params", "2,3,7", "--max-solutions", "3", "--format", "json"});
  CHECK(many.code == cli::kOk);
  CHECK(many.out.front() == '[');
}

TEST_CASE("validate-tables") {
  const auto text = run({"validate-tables"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("failures 0") != std::string::npos);
  const auto json = run({"validate-tables", "--format", "json"});
  CHECK(json.out.find("\"failures\":0") != std::string::npos);
}

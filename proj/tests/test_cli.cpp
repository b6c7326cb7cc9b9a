#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "funceq/cli.hpp"
#include "funceq/error.hpp"
#include "funceq/oracle.hpp"
#include "funceq/spec_file.hpp"

using namespace funceq;
namespace fs = std::filesystem;

namespace {

const fs::path kData = FUNCEQ_TEST_DATA;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

struct Result {
  int code;
  std::string out;
  std::string log;
};

Result run_with(RunConfig config) {
  std::ostringstream out, log;
  const int code = run(config, out, log);
  return {code, out.str(), log.str()};
}

}  // namespace

TEST_CASE("parse_spec") {
  const auto s = parse_spec("# 2,3-trees\nP = 0,1\n\nQ = 0, 0, 1, 1   # cubic\nbracket = 0.2,0.8\n");
  CHECK(s.P == Polynomial({0.0, 1.0}));
  CHECK(s.Q == Polynomial({0.0, 0.0, 1.0, 1.0}));
  CHECK(s.bracket.lo == 0.2);
  CHECK(s.bracket.hi == 0.8);

  const auto d = parse_spec("Q=0,0,1\nP=0,1\n");
  CHECK(d.bracket.lo == 0.1);
  CHECK(d.bracket.hi == 0.9);

  for (const char* bad : {"P = 0,1\n", "P = 0,1\nQ = 0,x\n", "P = 0,1\nQ = 0,0,1\nR = 1\n", "P 0,1\n",
                          "P = 0,1\nQ = 0,0,1\nbracket = 0.1\n", "P = 0,,1\nQ = 0,0,1\n"}) {
    try {
      parse_spec(bad);
      FAIL("accepted: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  CHECK_THROWS_AS(read_spec_file(kData / "missing.spec"), Error);
  CHECK(read_spec_file(kData / "two_three.spec").Q == Polynomial({0.0, 0.0, 1.0, 1.0}));
}

TEST_CASE("parse_command") {
  CHECK(parse_command("analyze") == Command::Analyze);
  CHECK(parse_command("compare") == Command::Compare);
  CHECK(parse_command("kfuncs") == Command::KFuncs);
  CHECK_FALSE(parse_command("plot").has_value());
}

TEST_CASE("analyze") {
  const auto r = run_with({.spec_path = kData / "two_three.spec", .command = Command::Analyze});
  REQUIRE(r.code == kSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "quantity,value");
  CHECK(lines[1] == "q,0.61803398875");
  CHECK(lines[2].rfind("alpha,-1.404334", 0) == 0);
  CHECK(lines[3].rfind("beta,0.867926", 0) == 0);
}

TEST_CASE("spectrum") {
  const auto r = run_with({.spec_path = kData / "two_three.spec", .command = Command::Spectrum});
  REQUIRE(r.code == kSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 11);
  const auto row = split(lines[1]);
  REQUIRE(row.size() == 5);
  CHECK(std::stod(row[1]) == doctest::Approx(-0.10417).epsilon(1e-4));
  CHECK(std::stod(row[2]) == doctest::Approx(0.0052295).epsilon(1e-4));
  CHECK(std::stod(row[3]) == doctest::Approx(-0.033869).epsilon(1e-4));
  CHECK(std::stod(row[4]) == doctest::Approx(0.0013274).epsilon(1e-4));

  const auto again = run_with({.spec_path = kData / "two_three.spec", .command = Command::Spectrum});
  CHECK(again.out == r.out);
}

TEST_CASE("compare and exact") {
  RunConfig config{.spec_path = kData / "two_three.spec", .command = Command::Compare, .n_max = 100};
  const auto r = run_with(config);
  REQUIRE(r.code == kSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 101);
  CHECK(lines[0] ==
        "n,exact,estimate_R1,estimate_R2,estimate_R3,scaled_residual_R1,scaled_residual_R2,scaled_residual_R3");

  auto table = coeffs_by_recurrence_23(100);
  normalize(table, ProblemSpec::build(Polynomial({0.0, 1.0}), Polynomial({0.0, 0.0, 1.0, 1.0})));
  for (std::size_t n = 1; n <= 100; ++n) {
    const auto row = split(lines[n]);
    REQUIRE(row.size() == 8);
    CHECK(std::stoul(row[0]) == n);
    CHECK(std::stod(row[1]) == doctest::Approx(table.normalized[n - 1]).epsilon(1e-11));
  }

  config.command = Command::Exact;
  config.n_max = 12;
  config.out_path = fs::temp_directory_path() / "funceq_exact.csv";
  REQUIRE(run_with(config).code == kSuccess);
  std::ifstream in(config.out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto exact = lines_of(buf.str());
  REQUIRE(exact.size() == 13);
  CHECK(split(exact[9])[1] == "5");
  fs::remove(config.out_path);
}

TEST_CASE("kfuncs") {
  const auto r = run_with({.spec_path = kData / "two_three.spec", .command = Command::KFuncs, .terms_R = 2, .samples = 16});
  REQUIRE(r.code == kSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 17);
  CHECK(lines[0] == "x,K1,K2");
}

TEST_CASE("exit codes") {
  const auto logistic = write_temp("funceq_logistic.spec", "P = 0,1\nQ = 0,3,-3\n");
  CHECK(run_with({.spec_path = logistic, .command = Command::Analyze}).code == kValidationFailure);
  const auto broken = write_temp("funceq_broken.spec", "P = 0,1\n");
  CHECK(run_with({.spec_path = broken, .command = Command::Analyze}).code == kValidationFailure);
  fs::remove(logistic);
  fs::remove(broken);

  CHECK(run_with({.spec_path = kData / "two_three.spec", .command = Command::Spectrum, .grid_N = 1000}).code ==
        kValidationFailure);
  CHECK(run_with({.spec_path = kData / "two_three.spec", .command = Command::Spectrum, .grid_N = 64, .modes_M = 20})
            .code == kValidationFailure);

  const auto r = run_with({.spec_path = kData / "squaring.spec", .command = Command::Spectrum, .y = 3.0, .grid_N = 256});
  CHECK(r.code == kNumericalFailure);
  CHECK(r.log.find("BadShift") != std::string::npos);

  const auto ok = run_with({.spec_path = kData / "squaring.spec", .command = Command::Spectrum, .y = 1.0, .grid_N = 256});
  CHECK(ok.code == kSuccess);
}

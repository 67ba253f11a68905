#include <doctest.h>

#include <fstream>
#include <sstream>

#include "flagspace/cli.hpp"

using flagspace::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FLAGSPACE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("report output matches the golden JSON") {
  CHECK(cli({"report", "--type", "A1", "--marking", "1", "--format", "json"}).out == golden("A1_1.json"));
  const auto f4 = cli({"report", "--type", "F4", "--marking", "1,4", "--numbering", "paper", "--format", "json"});
  CHECK(f4.code == flagspace::kExitOk);
  CHECK(f4.out == golden("F4_1_4.json"));
  // Byte-stable across runs.
  CHECK(cli({"report", "--type", "F4", "--marking", "1,4", "--format", "json"}).out == f4.out);
}

TEST_CASE("report text") {
  const auto r = cli({"report", "--type", "F4", "--marking", "1,4", "--dist", "(2,0),(0,1)"});
  CHECK(r.code == flagspace::kExitOk);
  CHECK(r.out.find("(2,0) 2210  ranks 5 0 0") != std::string::npos);
  CHECK(r.out.find("rank inequality: holds") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({"report", "--type", "H3", "--marking", "1"}).code == flagspace::kExitBadInput);
  CHECK(cli({"report", "--type", "F4", "--marking", "5"}).code == flagspace::kExitBadInput);
  CHECK(cli({"report", "--type", "F4", "--marking", "1", "--dist", "D0"}).code == flagspace::kExitBadInput);
  CHECK(cli({"report", "--type", "F4", "--marking", "1", "--format", "yaml"}).code == flagspace::kExitBadInput);
  CHECK(cli({"frobnicate"}).code == flagspace::kExitBadInput);
  CHECK(cli({}).code == flagspace::kExitBadInput);
  CHECK(cli({"--help"}).code == flagspace::kExitOk);

  const auto replay = cli({"replay"});
  CHECK(replay.code == flagspace::kExitOk);
  CHECK(replay.out.find("0 mismatches") != std::string::npos);
  CHECK(cli({"replay", "--only", "F4-caseIII"}).code == flagspace::kExitOk);
  CHECK(cli({"replay", "--only", "nope"}).code == flagspace::kExitBadInput);
  const auto wrong = cli({"replay", "--numbering", "bourbaki"});
  CHECK(wrong.code == flagspace::kExitCheckFailed);
  CHECK(wrong.out.find("F4 Case I") != std::string::npos);

  CHECK(cli({"sweep", "--max-rank", "9"}).code == flagspace::kExitBadInput);
  CHECK(cli({"sweep", "--max-rank", "2", "--check", "bogus"}).code == flagspace::kExitBadInput);
  CHECK(cli({"sweep", "--max-rank", "3", "--check", "ideal-oracle,properness,degrees"}).code == flagspace::kExitOk);
  CHECK(cli({"sweep", "--max-rank", "2", "--check", "chern-identity"}).code == flagspace::kExitCheckFailed);
}

TEST_CASE("sweep json and case listing") {
  const auto s = cli({"sweep", "--max-rank", "2", "--check", "strings,degrees", "--format", "json", "--serial"});
  CHECK(s.code == flagspace::kExitOk);
  CHECK(s.out.find("\"strings\"") != std::string::npos);
  const auto list = cli({"list-cases"});
  CHECK(list.code == flagspace::kExitOk);
  for (const char* id : {"F4-caseI", "F4-caseII", "F4-caseIII", "F4-a1a2", "C5-ladder"})
    CHECK(list.out.find(id) != std::string::npos);
}

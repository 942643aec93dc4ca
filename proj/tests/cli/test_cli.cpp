#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "run_process.hpp"

using gldiff::testing::quote;
using gldiff::testing::run_process;

namespace {

gldiff::testing::ProcessResult cli(const std::string& args) {
  return run_process(quote(GLDIFF_CLI) + " " + args, true);
}

std::string out(const std::string& args) {
  auto r = cli(args);
  REQUIRE(r.exit_code == 0);
  return r.out;
}

}  // namespace

TEST_CASE("algebra subcommands") {
  CHECK(out("bracket D t") == "t\n");
  CHECK(out("bracket t t^-1") == "C\n");
  CHECK(out("bracket --plain t t^-1") == "0\n");
  CHECK(out("product 't D' 't D'") == "t^2 D + t^2 D^2\n");
  CHECK(out("cocycle --n 3 t t^-1") == "3\n");
  CHECK(out("sigma --n 2 'E[1,2]'") == "-E[2,1]\n");
  CHECK(out("convert --to falling D^2") == "FD + FD^2\n");
  CHECK(out("convert --to power 'FD^2'") == "-D + D^2\n");
  // a leading minus needs the -- separator
  CHECK(out("convert --to power -- '-t D'") == "-t D\n");
  CHECK(out("degree --n 2 't D^3 E[1,2] + t + 2 C + E[2,1]'") ==
        "0: 2 C\n1: E[2,1] + t D^3 E[1,2]\n2: t E[1,1] + t E[2,2]\n");
}

TEST_CASE("module subcommands") {
  CHECK(out("act --n 2 't^2 D E[1,2]' 'v[3,2]'") == "(a + 3) v[5,1]\n");
  CHECK(out("act --family Vbar 1 'v[0,1]'") == "-v[0,1]\n");
  CHECK(out("act --lambda 1/2 D 'v[1,1]'") == "3/2 v[1,1]\n");
  CHECK(out("act --m 2 D 'v[0,1,2]'") == "v[0,1,1] + a v[0,1,2]\n");
  CHECK(out("pair 'v[2,1]' 'v[-2,1]'") == "1\n");
}

TEST_CASE("json output") {
  auto j = nlohmann::json::parse(out("bracket --format json t t^-1"));
  CHECK(j["central"] == "1");
  CHECK(j["terms"].empty());
  auto v = nlohmann::json::parse(out("act --format json t 'v[0,1]'"));
  CHECK(v["family"] == "V");
  CHECK(v["entries"][0]["k"] == 1);
  auto rep = nlohmann::json::parse(out("verify --samples 5 --format json"));
  CHECK(rep["all_passed"] == true);
  CHECK(rep["checks"].size() == 18);
  CHECK(rep["config"]["seed"] == 7);
}

TEST_CASE("verify is deterministic across serial and parallel runs") {
  std::string args = "verify --samples 20 --seed 3 --n 1,2,3 --format json";
  CHECK(out(args) == out(args + " --serial"));
  CHECK(out(args) == out(args));
}

TEST_CASE("exit codes") {
  CHECK(cli("verify --samples 10").exit_code == 0);
  CHECK(cli("verify --checks none").exit_code == 0);
  CHECK(cli("verify --checks no-such-check").exit_code == 2);

  auto dim = cli("bracket --n 2 'E[3,1]' t");
  CHECK(dim.exit_code == 2);
  CHECK(dim.out.find("E[3,1]") != std::string::npos);

  auto parse = cli("bracket 't ^' D");
  CHECK(parse.exit_code == 2);
  CHECK(parse.out.find("position 3") != std::string::npos);

  CHECK(cli("sigma C").exit_code == 2);
  CHECK(cli("pair --n 2 'v[0,1]' 'v[0,3]'").exit_code == 2);
  CHECK(cli("bogus").exit_code == 2);
  CHECK(cli("bracket t").exit_code == 2);
  CHECK(cli("--help").exit_code == 0);
}

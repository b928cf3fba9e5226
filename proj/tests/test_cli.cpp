#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = "cli_out.tmp";
  const std::string cmd =
      std::string(OURO_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream f(tmp, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(tmp.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("exit codes mirror the verdict") {
  CHECK(run_cli("check --fn \"mean(x1,x2)\" --domain \"R^2\"").exit_code == 0);
  CHECK(run_cli("check --fn \"x1+1\" --domain \"R\"").exit_code == 1);
  CHECK(run_cli("check --fn \"2*x1\" --domain \"real[0,1]\"").exit_code == 2);
  CHECK(run_cli("check --fn \"x1+)\" --domain \"R\"").exit_code == 3);
  CHECK(run_cli("check --fn \"x1\" --domain \"nonsense\"").exit_code == 3);
  CHECK(run_cli("check").exit_code == 3);
  CHECK(run_cli("bogus-subcommand").exit_code == 3);
}

TEST_CASE("failure output names a witness") {
  auto r = run_cli("check --fn \"x1+1\" --domain \"R\"");
  CHECK(r.output.find("witness") != std::string::npos);
  CHECK(r.output.find("Fails") != std::string::npos);
}

TEST_CASE("catalog names resolve") {
  CHECK(run_cli("check --name identity_int").exit_code == 0);
  CHECK(run_cli("check --name succ").exit_code == 1);
  CHECK(run_cli("check --name double_unit").exit_code == 2);
  CHECK(run_cli("check --name does_not_exist").exit_code == 3);
  auto r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mean_2") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  const std::string args =
      "check --name mean_3 --format json --seed 123 --samples 2000";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"status\": \"HoldsProbably\"") != std::string::npos);
  CHECK(a.output.find("\"seed\": 123") != std::string::npos);
}

TEST_CASE("slln csv output is stable and well formed") {
  const std::string args =
      "slln --dist \"uniform(0,1)\" --n-max 10000 --checkpoints 10,100,10000 "
      "--seed 9";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("n,running_mean,analytic_mean,abs_error\n", 0) == 0);
}

TEST_CASE("sweep reports every arity") {
  auto r = run_cli("sweep --n 1,2,4 --samples 200 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"n\": 4") != std::string::npos);

  auto mixed = run_cli("sweep --n 2 --domain \"int[0..9]\" --samples 50");
  CHECK(mixed.exit_code == 2);  // mean leaves the integers
}

TEST_CASE("image subcommand") {
  auto r = run_cli("image --name const_7_int --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"equal\": true") != std::string::npos);

  auto s = run_cli("image --name succ");
  CHECK(s.exit_code == 1);
  CHECK(s.output.find("no") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_report.tmp.json";
  auto r = run_cli("check --name mean_2 --format json --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("\"function\": \"mean_2\"") != std::string::npos);
  std::remove(path.c_str());
}

// Drives the built CLI binary through std::system and checks output bytes,
// exit codes, and the error mapping.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
  const std::string out_path = "cli_out_" + tag + ".txt";
  const std::string cmd =
      std::string(SLICE_BERGMAN_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

}  // namespace

TEST_CASE("kernel evaluation at the origin prints 1/pi") {
  const auto r = run_cli("kernel --kernel ball_I --q 0,0,0,0 --r 0.3,0,0,0", "k1");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"value\":[0.31830988618379069,0,0,0]") != std::string::npos);
  CHECK(r.stdout_text.find("\"error\":null") != std::string::npos);
}

TEST_CASE("ball form flag spellings agree") {
  const auto a = run_cli("kernel --kernel ball_II --q 0.1,0.2,0,0 --r 0.3,0,0.1,0", "k2");
  const auto b = run_cli("kernel --kernel ball --form II --q 0.1,0.2,0,0 --r 0.3,0,0.1,0",
                         "k3");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("reproduce returns the identity at the target") {
  const auto r = run_cli(
      "reproduce --fn "
      "'{\"type\":\"polynomial\",\"coeffs\":[[0,0,0,0],[1,0,0,0]]}' "
      "--q 0.3,0.2,0,0 --domain ball --slice 1,0,0",
      "r1");
  CHECK(r.exit_code == 0);
  // 17 significant digits: 0.3 prints as its round-trip representation.
  CHECK(r.stdout_text.find("\"value\":[0.29999999999999") != std::string::npos);
  CHECK(r.stdout_text.find(",0.20000000000000") != std::string::npos);
  CHECK(r.stdout_text.find("\"rel\":") != std::string::npos);
  CHECK(r.stdout_text.find("\"n_r\":64") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::string args =
      "norm --fn '{\"type\":\"polynomial\",\"coeffs\":[[0,0,0,0],[1,0,0,0]]}' "
      "--kind mc --seed 99 --samples 200000";
  const auto a = run_cli(args, "d1");
  const auto b = run_cli(args, "d2");
  CHECK(a.exit_code == 0);
  CHECK(!a.stdout_text.empty());
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("threads flag does not change the result") {
  const std::string base =
      "bf-transform --fn '{\"type\":\"polynomial\",\"coeffs\":[[0,0,0,0],[0,0,0,0],"
      "[1,0,0,0]]}' --q 0.2,0.1,0,0";
  const auto a = run_cli(base + " --threads 1", "t1");
  const auto b = run_cli(base + " --threads 4", "t2");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("stem and kernel-section function specs parse and evaluate") {
  const auto stem = run_cli(
      "norm --fn '{\"type\":\"stem\",\"F\":{\"type\":\"poly\",\"coeffs\":[[0,0],[1,0]]},"
      "\"G\":{\"type\":\"poly\",\"coeffs\":[[0,0]]},\"i\":[1,0,0],\"j\":[0,1,0]}' "
      "--kind slice",
      "s1");
  CHECK(stem.exit_code == 0);
  // The identity has slice norm sqrt(pi/2).
  CHECK(stem.stdout_text.find("\"value\":[1.2533") != std::string::npos);

  const auto section = run_cli(
      "reproduce --fn "
      "'{\"type\":\"kernel_section\",\"kernel\":\"ball_I\",\"r\":[0.2,0,0.1,0]}' "
      "--q 0.1,0.3,0,0",
      "s2");
  CHECK(section.exit_code == 0);
  CHECK(section.stdout_text.find("\"error\":{\"abs\":") != std::string::npos);

  const auto rational = run_cli(
      "norm --fn '{\"type\":\"intrinsic_rational\",\"num\":[1],\"den\":[1,-1]}' "
      "--kind slice --check-divergence",
      "s3");
  CHECK(rational.exit_code == 2);
  CHECK(rational.stdout_text.find("\"kind\":\"DivergenceSuspected\"") != std::string::npos);
}

TEST_CASE("malformed function specs map to exit 2 with a diagnostic") {
  const auto r = run_cli("norm --fn '{\"type\":\"polynomial\"}'", "e1");
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("\"kind\":\"BadParameter\"") != std::string::npos);
  CHECK(r.stdout_text.find("coeffs") != std::string::npos);

  const auto bad_json = run_cli("norm --fn '{\"type\":'", "e2");
  CHECK(bad_json.exit_code == 2);
  CHECK(bad_json.stdout_text.find("\"kind\":\"BadParameter\"") != std::string::npos);
}

TEST_CASE("module errors map to exit 2 with their kind") {
  const auto r = run_cli(
      "contour --fn '{\"type\":\"polynomial\",\"coeffs\":[[1,0,0,0]]}' "
      "--q 0.78,0,0,0 --rho 0.8",
      "e3");
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("\"kind\":\"ContourTooClose\"") != std::string::npos);
}

TEST_CASE("unknown flags map to exit 2") {
  const auto r = run_cli("kernel --does-not-exist 1", "e4");
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("\"kind\":\"BadParameter\"") != std::string::npos);
}

TEST_CASE("csv rows accumulate with a single header") {
  const std::string csv = "cli_rows.csv";
  std::remove(csv.c_str());
  const std::string args =
      "kernel --kernel q_factor --q 0.1,0,0,0 --r 0.2,0,0,0 --csv " + csv;
  run_cli(args, "c1");
  run_cli(args, "c2");
  std::ifstream in(csv);
  std::string line;
  int lines = 0, headers = 0;
  while (std::getline(in, line)) {
    ++lines;
    if (line.rfind("command,inputs,", 0) == 0) ++headers;
  }
  CHECK(lines == 3);
  CHECK(headers == 1);
}

TEST_CASE("help prints and a missing subcommand is an input error") {
  const auto help = run_cli("--help", "h1");
  CHECK(help.exit_code == 0);
  CHECK(help.stdout_text.find("kernel") != std::string::npos);

  const auto none = run_cli("", "h2");
  CHECK(none.exit_code == 2);
  CHECK(none.stdout_text.find("\"kind\":\"BadParameter\"") != std::string::npos);
}

TEST_CASE("verify subcommand runs a small suite") {
  const auto r = run_cli("verify --suite schwarz", "v1");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"failures\":0") != std::string::npos);
  CHECK(r.stdout_text.find("representation_formula_variants") != std::string::npos);
}

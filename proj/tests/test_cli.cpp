#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "primal/primal.hpp"

using namespace primal;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary with stdout captured and stderr dropped; stdin
// is fed through a scratch file next to the test binary.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  std::string scratch = "cli_stdin_" + std::to_string(++counter) + ".txt";
  std::string cmd = std::string(PRIMAL_CLI_PATH) + " " + args;
  if (stdin_text.empty()) {
    cmd += " < /dev/null";
  } else {
    std::ofstream f(scratch);
    f << stdin_text;
    f.close();
    cmd += " < " + scratch;
  }
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!stdin_text.empty()) std::remove(scratch.c_str());
  return r;
}

std::string data_file(const std::string& name) {
  return std::string(PRIMAL_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kXX = "letters x y\nforbid x x\n";
const char* kXXYY = "letters x y\nforbid x x\nforbid y y\n";

}  // namespace

TEST_CASE("cli classify text report") {
  RunResult r = run_cli("classify " + data_file("xx_yy.pres"));
  REQUIRE(r.code == 0);
  std::string expected =
      "input: presentation: letters x y; forbid x x; forbid y y\n"
      "minimal automaton: 4 states, initial 0, sink 3\n"
      "factor closed: yes\n"
      "prime: yes\n"
      "classes: {0} {1 2}\n"
      "class order: 0 < 1\n"
      "maximal classes: 1\n"
      "pivot: 1\n"
      "generators at pivot: one; sample: y x\n"
      "growth: polynomial, degree 1\n"
      "hilbert: (1 + t) / (1 - t)\n"
      "verdict: PI\n";
  REQUIRE(r.out == expected);
}

TEST_CASE("cli classify json is stable") {
  RunResult first = run_cli("classify --json " + data_file("xx_yy.pres"));
  RunResult second = run_cli("classify --json " + data_file("xx_yy.pres"));
  REQUIRE(first.code == 0);
  REQUIRE(first.out == second.out);
  REQUIRE(first.out.find("\"verdict\": \"PI\"") != std::string::npos);
  REQUIRE(first.out.find("\"generators_sample\"") != std::string::npos);
  REQUIRE(first.out.back() == '\n');

  // the same report computed in process matches the binary byte for byte
  REQUIRE(first.out == report_to_json(classify(parse_presentation(slurp(
                           data_file("xx_yy.pres"))))));
}

TEST_CASE("cli classify rejects non factor closed automata with code 2") {
  RunResult r = run_cli("classify " + data_file("parity.aut"));
  REQUIRE(r.code == 2);
  REQUIRE(r.out.find("factor closed: no") != std::string::npos);
  REQUIRE(r.out.find("verdict: NotMonomialLanguage") != std::string::npos);

  // empty language: structurally fine but nothing to classify
  RunResult e = run_cli("classify -",
                        "letters x\nstates 1\ninitial 0\naccept\ntrans 0 x 0\n");
  REQUIRE(e.code == 2);
  REQUIRE(e.out.find("verdict: NotMonomialLanguage") != std::string::npos);
}

TEST_CASE("cli counting and listing") {
  RunResult r = run_cli("count -n 4 -", kXX);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "1 2 3 5 8\n");

  r = run_cli("basis -n 2 -", kXX);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "ε\nx\ny\nx y\ny x\ny y\n");
}

TEST_CASE("cli growth and hilbert") {
  REQUIRE(run_cli("growth -", kXXYY).out == "polynomial 1\n");
  REQUIRE(run_cli("growth -", kXX).out == "exponential\n");
  REQUIRE(run_cli("hilbert -", kXXYY).out == "(1 + t) / (1 - t)\n");
  REQUIRE(run_cli("hilbert -", kXX).out == "(1 + t) / (1 - t - t^2)\n");

  RunResult bad = run_cli("growth " + data_file("parity.aut"));
  REQUIRE(bad.code == 2);
  REQUIRE(bad.out.empty());
}

TEST_CASE("cli primeness") {
  RunResult r = run_cli("prime -", kXX);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "prime\n");

  r = run_cli("prime -", "letters x y\nforbid y x\n");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "not prime: u = y, v = x\n");

  REQUIRE(run_cli("prime " + data_file("parity.aut")).code == 2);
}

TEST_CASE("cli decompose and witness") {
  RunResult r = run_cli("decompose --word 'y x y' -", kXXYY);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "b = y x ; x = y\n");

  r = run_cli("witness --element x -", kXX);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "v = ε ; r = y ; result = x y\n");

  // witness refuses algebras that are not prime
  r = run_cli("witness --element x -", "letters x y\nforbid y x\n");
  REQUIRE(r.code == 1);

  // dead word from the anchor state
  r = run_cli("decompose --word 'x x' -", kXXYY);
  REQUIRE(r.code == 1);
}

TEST_CASE("cli reverse") {
  RunResult r = run_cli("reverse -", "letters x y\nforbid x x y\n");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "letters x y\nforbid y x x\n");

  RunResult a = run_cli("reverse " + data_file("parity.aut"));
  REQUIRE(a.code == 0);
  std::string expected =
      automaton_to_text(minimize(reverse_dfa(parse_automaton(slurp(
          data_file("parity.aut"))))).get());
  REQUIRE(a.out == expected);
}

TEST_CASE("cli minimize and dot") {
  // states 1 and 2 accept the same language, so they collapse
  std::string bloated =
      "letters x\nstates 4\ninitial 0\naccept 0 1 2\n"
      "trans 0 x 1\ntrans 1 x 3\ntrans 2 x 3\ntrans 3 x 3\n";
  RunResult r = run_cli("minimize -", bloated);
  REQUIRE(r.code == 0);
  REQUIRE(r.out == automaton_to_text(minimize(parse_automaton(bloated)).get()));
  REQUIRE(r.out.find("states 3\n") != std::string::npos);

  RunResult d = run_cli("dot -", kXXYY);
  REQUIRE(d.code == 0);
  REQUIRE(d.out.find("digraph") != std::string::npos);
  REQUIRE(d.out.find("doublecircle") != std::string::npos);
}

TEST_CASE("cli error handling") {
  REQUIRE(run_cli("classify -", "letters x y\nforbid q\n").code == 1);
  REQUIRE(run_cli("classify /no/such/file").code == 1);
  REQUIRE(run_cli("").code == 1);          // a subcommand is required
  REQUIRE(run_cli("--help").code == 0);
  REQUIRE(run_cli("count --max-length notanumber -", kXX).code == 1);
}

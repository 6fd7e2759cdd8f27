#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "lls/lls.hpp"

namespace {

struct RunResult {
  int status;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LLS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, got);
  }
  int rc = pclose(pipe);
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return {WEXITSTATUS(rc), out};
}

std::string fixture_path(const std::string& stem) {
  return std::string(LLS_TABLES_DIR) + "/" + stem + ".cay";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("normalize subcommand") {
  auto r = run_cli("normalize xxxyz");
  CHECK(r.status == 0);
  CHECK(r.output == "xxyz\n");
  CHECK(run_cli("normalize yyxyx").output == "yyx\n");
  CHECK(run_cli("normalize \"ab cd ab\"").output == "ab cd\n");
}

TEST_CASE("mult subcommand") {
  CHECK(run_cli("mult x xy").output == "xxy\n");
  CHECK(run_cli("mult xy yyx").output == "xy\n");
  CHECK(run_cli("mult y yx").output == "yyx\n");
}

TEST_CASE("equiv subcommand") {
  auto r = run_cli("equiv xyxz xyzz");
  CHECK(r.status == 0);
  CHECK(r.output == "true\n");
  CHECK(run_cli("equiv xy yx").output == "false\n");
}

TEST_CASE("free-table matches the library byte for byte") {
  auto r = run_cli("free-table --letters xy");
  CHECK(r.status == 0);
  CHECK(r.output == lls::free_semigroup({"x", "y"}).table.to_text());

  auto multi = run_cli("free-table --letters ab,cd");
  CHECK(multi.status == 0);
  CHECK(contains(multi.output, "ab.cd"));

  CHECK(run_cli("free-table --letters abcde").status == 1);
  CHECK(run_cli("free-table --letters abcde --max-letters 5").status == 0);
}

TEST_CASE("analyze table 4") {
  auto r = run_cli("analyze " + fixture_path("table4"));
  CHECK(r.status == 0);
  CHECK(contains(r.output, "order: 4\n"));
  CHECK(contains(r.output, "left_legal: true\n"));
  CHECK(contains(r.output, "ab=ac: true\n"));
  CHECK(contains(r.output, "varieties: B C A LLS\n"));
  CHECK(contains(r.output, "subdirectly_irreducible: false\n"));
  CHECK(contains(r.output, "b retract-leftzero-equivalence: pass (positive)"));
}

TEST_CASE("analyze table 5") {
  auto r = run_cli("analyze " + fixture_path("table5"));
  CHECK(r.status == 0);
  CHECK(contains(r.output, "left_legal: true\n"));
  CHECK(contains(r.output, "retract: false\n"));
  CHECK(contains(r.output, "\nvarieties: LLS\n"));
  CHECK(contains(r.output, "aab=aa: true\n"));
}

TEST_CASE("analyze agrees with the in-process report") {
  auto r = run_cli("analyze " + fixture_path("table3"));
  CHECK(r.status == 0);
  CHECK(r.output ==
        lls::analyze(testkit::load_fixture("table3")).to_text());
}

TEST_CASE("congruences subcommand") {
  auto r = run_cli("congruences " + fixture_path("table4"));
  CHECK(r.status == 0);
  CHECK(contains(r.output, "# count: 9\n"));
  CHECK(contains(r.output, "{x b} {y c}\n"));
  CHECK(contains(r.output, "{x} {y} {b c}\n"));

  auto bounded = run_cli("congruences " + fixture_path("table4") +
                         " --max-order 3");
  CHECK(bounded.status == 1);
  CHECK(contains(bounded.output, "error:"));
  CHECK(contains(bounded.output, "bounded at order 3"));
}

TEST_CASE("enumerate subcommand") {
  auto r = run_cli("enumerate --order 2 --left-legal --up-to-iso");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "# count: 3\n"));

  auto comm = run_cli("enumerate --order 2 --identity ab=ba --up-to-iso");
  CHECK(comm.status == 0);
  CHECK(contains(comm.output, "# count: 3\n"));

  auto bad = run_cli("enumerate --order 2 --identity nope");
  CHECK(bad.status == 2);

  auto big = run_cli("enumerate --order 5");
  CHECK(big.status == 1);
  CHECK(contains(big.output, "error:"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("bogus").status == 2);
  CHECK(run_cli("").status == 2);           // a subcommand is required
  CHECK(run_cli("normalize").status == 2);  // missing the word
  auto help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(contains(help.output, "normalize"));
  CHECK(contains(help.output, "analyze"));
}

TEST_CASE("data errors exit with 1") {
  auto missing = run_cli("analyze /nonexistent/table.cay");
  CHECK(missing.status == 1);
  CHECK(contains(missing.output, "error: cannot open"));

  auto empty_word = run_cli("normalize \"\"");
  CHECK(empty_word.status == 1);
  CHECK(contains(empty_word.output, "error:"));

  // a non-associative table is rejected with a witness triple
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / "lls_test_bad_table.cay";
  {
    std::ofstream out(path);
    out << "2\n1 0\n1 0\n";
  }
  auto bad = run_cli("analyze " + path.string());
  CHECK(bad.status == 1);
  CHECK(contains(bad.output, "error: not associative"));
  CHECK(contains(bad.output, "(a*a)*a"));
  std::filesystem::remove(path);

  auto malformed = path.parent_path() / "lls_test_malformed.cay";
  {
    std::ofstream out(malformed);
    out << "2\n0 0\n";
  }
  auto parse = run_cli("analyze " + malformed.string());
  CHECK(parse.status == 1);
  CHECK(contains(parse.output, "error: line 2"));
  std::filesystem::remove(malformed);
}

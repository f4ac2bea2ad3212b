// End-to-end runs of the cyltn command line tool: one process per check,
// asserting exit codes and exact stdout/stderr bytes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string scratch_path(const std::string& name) {
  static const std::filesystem::path dir = [] {
    const std::filesystem::path d =
        std::filesystem::temp_directory_path() / "cyltn_cli_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const std::string path = scratch_path(name);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  REQUIRE(static_cast<bool>(out));
  out << text;
  return path;
}

// Arguments must not need shell quoting; fixtures are passed as file paths.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_path = scratch_path("stdout_" + tag + ".txt");
  const std::string err_path = scratch_path("stderr_" + tag + ".txt");
  const std::string cmd = std::string(CYLTN_BIN) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

const char kUnipotent[] =
    R"({"n":2,"m":2,"entries":[[{"0":"1"},{"0":"2"}],[{},{"0":"1"}]]})";

// 2x2 periodic matrix that fails total nonnegativity with a -22 minor on
// rows {1,2}, columns {1,2} of the unfolded window.
const char kCounterexample[] =
    R"({"n":2,"m":2,"entries":[[{"0":"21","1":"10","2":"1"},{"0":"40","1":"14","2":"1"}],[{"0":"10","1":"7","2":"1"},{"0":"18","1":"9","2":"1"}]]})";

const char kStuckEntry[] = R"({"n":1,"m":1,"entries":[[{"0":"1","1":"1","2":"1"}]]})";

// Factoring kUnipotent yields this planar network (no wrap edges).
const char kUnipotentNet[] =
    R"({"vertices":6,"sources":[0,1],"sinks":[4,5],"edges":[{"tail":0,"head":2,"weight":"1","hcross":0},{"tail":1,"head":3,"weight":"1","hcross":0},{"tail":2,"head":4,"weight":"1","hcross":0},{"tail":3,"head":5,"weight":"1","hcross":0},{"tail":2,"head":5,"weight":"2","hcross":0}]})";

}  // namespace

TEST_CASE("factor subcommand") {
  const std::string input = write_fixture("unipotent.json", kUnipotent);

  SUBCASE("prints the network and exits 0") {
    const RunResult r = run_cli("factor --input " + input);
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kUnipotentNet) + "\n");
    CHECK(r.err == "");
  }

  SUBCASE("--output mirrors stdout into a file") {
    const std::string out_file = scratch_path("factored_net.json");
    const RunResult r =
        run_cli("factor --input " + input + " --output " + out_file);
    CHECK(r.code == 0);
    CHECK(slurp(out_file) == r.out);
    CHECK(r.out == std::string(kUnipotentNet) + "\n");
  }

  SUBCASE("--trace narrates the steps on stderr") {
    const RunResult r = run_cli("factor --input " + input + " --trace");
    CHECK(r.code == 0);
    CHECK(r.err ==
          "step 1 [corner_elim, right] corner eliminated at row 2, column 1 "
          "of the transpose, ratio 2\n"
          "step 2 [base_diagonal, left] single diagonal of size 2 at offset "
          "0\n"
          "certified: network weight matrix equals the input\n");
  }

  SUBCASE("refuses a matrix with a negative minor") {
    const std::string bad = write_fixture("counterexample.json", kCounterexample);
    const RunResult r = run_cli("factor --input " + bad);
    CHECK(r.code == 2);
    CHECK(r.out ==
          R"({"kind":"not_totally_nonnegative","reason":"elimination produced a negative coefficient","witness":{"rows":[1,2],"cols":[1,2],"value":"-22"}})"
          "\n");
  }

  SUBCASE("reports an entry it cannot peel") {
    const std::string stuck = write_fixture("stuck.json", kStuckEntry);
    const RunResult r = run_cli("factor --input " + stuck);
    CHECK(r.code == 2);
    CHECK(r.out ==
          R"({"kind":"factorization_stuck","reason":"entry has no rational root to peel a linear factor from"})"
          "\n");
  }
}

TEST_CASE("check-tn subcommand") {
  SUBCASE("clean window") {
    const std::string input = write_fixture("unipotent.json", kUnipotent);
    const RunResult r = run_cli("check-tn --input " + input);
    CHECK(r.code == 0);
    CHECK(r.out == R"({"tn_window":true,"witness":null})" "\n");
  }

  SUBCASE("negative minor with witness") {
    const std::string input =
        write_fixture("counterexample.json", kCounterexample);
    const RunResult r = run_cli("check-tn --input " + input);
    CHECK(r.code == 2);
    CHECK(r.out ==
          R"({"tn_window":false,"witness":{"rows":[1,2],"cols":[1,2],"value":"-22"}})"
          "\n");
  }
}

TEST_CASE("weight-matrix subcommand") {
  const std::string net = write_fixture("unipotent_net.json", kUnipotentNet);

  SUBCASE("--folded reproduces the factored matrix byte for byte") {
    const RunResult r = run_cli("weight-matrix --input " + net + " --folded");
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kUnipotent) + "\n");
  }

  SUBCASE("folded output is the default") {
    const RunResult r = run_cli("weight-matrix --input " + net);
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kUnipotent) + "\n");
  }

  SUBCASE("--window prints a dense unfolded block") {
    const RunResult r = run_cli("weight-matrix --input " + net + " --window 4 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"rows":4,"cols":4,"entries":[["1","2","0","0"],["0","1","0","0"],["0","0","1","2"],["0","0","0","1"]]})"
          "\n");
  }

  SUBCASE("--window and --folded are mutually exclusive") {
    const RunResult r =
        run_cli("weight-matrix --input " + net + " --window 4 4 --folded");
    CHECK(r.code == 1);
  }
}

TEST_CASE("glv-verify subcommand") {
  const std::string net = write_fixture(
      "glv_net.json",
      R"({"vertices":4,"sources":[0,1],"sinks":[2,3],"edges":[{"tail":0,"head":2,"weight":"1","hcross":0},{"tail":0,"head":3,"weight":"6","hcross":0},{"tail":1,"head":3,"weight":"1","hcross":0}]})");
  const RunResult r =
      run_cli("glv-verify --input " + net + " --rows 1 --cols 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"rows":[1],"cols":[2],"glv":"6","det":"6","equal":true})" "\n");
}

TEST_CASE("tl-verify subcommand") {
  SUBCASE("random mode checks relations and immanant identities") {
    const RunResult r = run_cli("tl-verify --n 3 --trials 2 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "tl-relations (n=3): ok\n"
          "trial 1: rs-identity over all index pairs: ok\n"
          "trial 1: identity immanant equals determinant: ok\n"
          "trial 2: rs-identity over all index pairs: ok\n"
          "trial 2: identity immanant equals determinant: ok\n"
          "PASS\n");
  }

  SUBCASE("matrix mode checks one index pair") {
    const std::string m = write_fixture(
        "dense33.json",
        R"({"rows":3,"cols":3,"entries":[["1","2","3"],["4","5","6"],["7","8","10"]]})");
    const RunResult r = run_cli("tl-verify --n 3 --matrix " + m +
                                " --rows 1,2 --cols 1,3");
    CHECK(r.code == 0);
    CHECK(r.out == "rs-identity (rows={1,2}, cols={1,3}): ok\nPASS\n");
  }

  SUBCASE("--rows without --matrix is rejected") {
    const RunResult r = run_cli("tl-verify --n 3 --rows 1,2");
    CHECK(r.code == 1);
  }
}

TEST_CASE("interlace subcommand") {
  SUBCASE("agreeing true pair") {
    const RunResult r = run_cli("interlace --p0 3,4,1 --p1 2,1");
    CHECK(r.code == 0);
    CHECK(r.out == R"({"interlaces":true,"agree":true})" "\n");
  }

  SUBCASE("false pair exits 2") {
    const RunResult r = run_cli("interlace --p0 2,1 --p1 1,1");
    CHECK(r.code == 2);
    CHECK(r.out == R"({"interlaces":false,"agree":true})" "\n");
  }

  SUBCASE("single method omits the agreement key") {
    const RunResult sturm =
        run_cli("interlace --p0 3,4,1 --p1 2,1 --method sturm");
    CHECK(sturm.code == 0);
    CHECK(sturm.out == R"({"interlaces":true})" "\n");
    const RunResult routh =
        run_cli("interlace --p0 3,4,1 --p1 2,1 --method routh");
    CHECK(routh.code == 0);
    CHECK(routh.out == R"({"interlaces":true})" "\n");
  }

  SUBCASE("negative coefficients are refused") {
    const RunResult r = run_cli("interlace --p0=-1,1 --p1 1,1");
    CHECK(r.code == 1);
    CHECK(r.err ==
          "error: interlace requires nonnegative coefficients\n");
  }

  SUBCASE("unknown method is a usage error") {
    const RunResult r = run_cli("interlace --p0 1,1 --p1 1,1 --method newton");
    CHECK(r.code == 1);
  }
}

TEST_CASE("hurwitz subcommand") {
  SUBCASE("stacks the pair into a two-row periodic matrix") {
    const RunResult r = run_cli("hurwitz --p0 1,1 --p1 2,1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"n":2,"m":1,"entries":[[{"0":"2","1":"1"}],[{"0":"1","1":"1"}]]})"
          "\n");
  }

  SUBCASE("--out writes the same document") {
    const std::string out_file = scratch_path("hurwitz_out.json");
    const RunResult r =
        run_cli("hurwitz --p0 1,1 --p1 2,1 --out " + out_file);
    CHECK(r.code == 0);
    CHECK(slurp(out_file) == r.out);
  }
}

TEST_CASE("top level failure modes") {
  SUBCASE("no subcommand") {
    const RunResult r = run_cli("");
    CHECK(r.code == 1);
  }

  SUBCASE("unknown subcommand") {
    const RunResult r = run_cli("frobnicate");
    CHECK(r.code == 1);
  }

  SUBCASE("missing input file") {
    const RunResult r = run_cli("factor --input " + scratch_path("absent.json"));
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open for reading") != std::string::npos);
  }

  SUBCASE("malformed JSON input") {
    const std::string bad = write_fixture("malformed.json", "not json {");
    const RunResult r = run_cli("factor --input " + bad);
    CHECK(r.code == 1);
    CHECK(r.err.find("not parseable") != std::string::npos);
  }

  SUBCASE("--help exits 0") {
    const RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("factor") != std::string::npos);
  }
}

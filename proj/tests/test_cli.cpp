#include "qtcat/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = qtcat::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("poly subcommand", "[cli]") {
  RunResult r = run({"poly", "carlitz", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1\n");

  CHECK(run({"poly", "qt-catalan", "3"}).out == "t^2+t*q+2*t+1\n");
  CHECK(run({"poly", "qt-catalan", "3", "--format", "json"}).out ==
        "{\"vars\":[\"t\",\"q\"],\"terms\":["
        "{\"exp\":[2,0],\"coef\":\"1\"},"
        "{\"exp\":[1,1],\"coef\":\"1\"},"
        "{\"exp\":[1,0],\"coef\":\"2\"},"
        "{\"exp\":[0,0],\"coef\":\"1\"}]}\n");

  RunResult bad = run({"poly", "nosuch", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err == "error: unknown family: nosuch\n");
}

TEST_CASE("dist subcommand", "[cli]") {
  RunResult r = run({"dist", "av:231@n=3", "t^des,q^31-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t^2+t*q+2*t+1\n");
}

TEST_CASE("cf subcommand", "[cli]") {
  RunResult r = run({"cf", "qt-catalan", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "z^0: 1\nz^1: 1\nz^2: t+1\nz^3: t^2+t*q+2*t+1\n");
}

TEST_CASE("gamma subcommand", "[cli]") {
  RunResult ok = run({"gamma", "t^3+6*t^2+6*t+1", "--span", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "gamma[0]: 1\ngamma[1]: 3\nstatus: success\n");

  // A failed expansion is an answer, not an error: exit stays 0.
  RunResult fail = run({"gamma", "t^2+2", "--span", "2"});
  CHECK(fail.code == 0);
  CHECK(fail.out ==
        "gamma[0]: 2\ngamma[1]: -4\nstatus: failure\nremainder: -t^2\n");

  CHECK(run({"gamma", "t^2"}).code == 2);  // --span is required
}

TEST_CASE("seq subcommand", "[cli]") {
  CHECK(run({"seq", "catalan", "6"}).out == "1\n1\n2\n5\n14\n42\n");
  CHECK(run({"seq", "F", "4"}).out == "1\n7\n58\n545\n");
  CHECK(run({"seq", "r", "9", "--format", "bfile"}).out ==
        "0 1\n1 2\n2 10\n3 66\n4 498\n5 4066\n6 34970\n7 312066\n8 2862562\n");
  CHECK(run({"seq", "t", "4", "--format", "bfile"}).out ==
        "1 1\n2 4\n3 24\n4 172\n");
  CHECK(run({"seq", "t", "4", "--format", "bfile", "--offset", "0"}).out ==
        "0 1\n1 4\n2 24\n3 172\n");
  CHECK(run({"seq", "ballot", "4"}).out == "1\n1 1\n1 2 2\n1 3 5 5\n");

  CHECK(run({"seq", "F", "5"}).code == 2);  // needs --deep
  CHECK(run({"seq", "ballot", "3", "--format", "bfile"}).code == 2);
  CHECK(run({"seq", "nosuch", "3"}).code == 2);
}

TEST_CASE("orbit subcommand", "[cli]") {
  RunResult r = run({"orbit", "231", "zero"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "kind: zero\n"
        "representative: 1 2 3\n"
        "size: 4\n"
        "1 2 3  des=0  31-2=0  2-13=0  adi=0\n"
        "1 3 2  des=1  31-2=0  2-13=0  adi=0\n"
        "2 3 1  des=1  31-2=0  2-13=0  adi=0\n"
        "3 2 1  des=2  31-2=0  2-13=0  adi=0\n"
        "sum: t^2+2*t+1\n");

  RunResult tsv = run({"orbit", "231", "np1", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "member\tdes\t13-2\t2-31\n2 3 1\t1\t0\t1\n");

  CHECK(run({"orbit", "231", "sideways"}).code == 2);
}

TEST_CASE("verify subcommand", "[cli]") {
  RunResult r = run({"verify", "ballot", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{\"suite\":\"ballot\",\"params\":\"n<=3\",\"status\":\"pass\"") == 0);
  CHECK(run({"verify", "nosuch"}).code == 2);
}

TEST_CASE("conjecture subcommand", "[cli]") {
  RunResult r = run({"conjecture", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G[1]: 0\ngamma[1]: 0\nG[2]: t\ngamma[2]: 0 1\n"
                   "G[3]: t^2+t\ngamma[3]: 0 1\n") == 0);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({"poly"}).code == 2);  // missing arguments
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("poly") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("output redirection", "[cli]") {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "qtcat_cli_out_test.txt";
  RunResult r = run({"--out", path.string(), "poly", "carlitz", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1\n");
  std::filesystem::remove(path);
}

TEST_CASE("identical invocations give identical bytes", "[cli]") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"poly", "qt-catalan", "5"},
        std::vector<std::string>{"dist", "av:2413,3142;alt@n=5", "t^des"},
        std::vector<std::string>{"orbit", "2 1 4 3", "bar"}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

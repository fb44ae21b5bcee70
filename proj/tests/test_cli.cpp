#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BRAUERLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("rank json matches the documented format") {
  RunResult r = run("rank E6 --json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"type\":\"E6\",\"rank\":1440585}\n");
}

TEST_CASE("reduce json on the delta-ledger example") {
  RunResult r = run("reduce E6 \"e2 e3 e6 e5 e4 e3 e2 e4 e5 e6\" --json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"delta\":1,\"tokens\":[\"e2\",\"e3\",\"e6\"]}\n");
}

TEST_CASE("tables verifies every E6 cell") {
  RunResult r = run("tables E6 --no-cache");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("tl rank flag") {
  RunResult r = run("rank E6 --tl --json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"type\":\"E6\",\"tl_rank\":662}\n");
}

TEST_CASE("exit codes: domain error and caps exhaustion") {
  CHECK(run("closure E6 \"a1 a3\"").code == 1);       // not orthogonal
  CHECK(run("equiv E6 \"r1\" \"r3\"").code == 2);     // not equivalent in caps
  CHECK(run("equiv E6 \"r1 r2\" \"r2 r1\"").code == 0);
  CHECK(run("roots F4").code == 1);                   // unknown diagram
  CHECK(run("reduce E6 \"r9\"").code == 1);           // out-of-range token
}

TEST_CASE("fuzz is reproducible for a fixed seed") {
  std::string args = "fuzz A3 --count 200 --seed 12 --caps-extra-length 4 --json";
  RunResult a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"fails\":0") != std::string::npos);
}

TEST_CASE("decompose and multiply round trip through the CLI") {
  RunResult d = run("decompose E6 \"e6\" --json");
  CHECK(d.code == 0);
  std::string nf = d.out.substr(0, d.out.size() - 1);
  RunResult m = run("multiply E6 '" + nf + "' '" + nf + "'");
  CHECK(m.code == 0);
  CHECK(m.out.find("\"delta\":2") != std::string::npos);
}

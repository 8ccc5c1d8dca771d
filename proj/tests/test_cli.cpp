#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// exercised through the installed binary; CLI_PATH comes from the build
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_line(std::string s, const std::string& key) {
  const auto pos = s.find(key);
  if (pos == std::string::npos) return s;
  const auto end = s.find('\n', pos);
  s.erase(pos, end - pos);
  return s;
}

std::string strip_wall_time(std::string s) {
  return strip_line(std::move(s), "\"wall_ms\"");
}

}  // namespace

TEST_CASE("passing verify exits zero") {
  const auto r = run_cli("verify alpha --p 2 --tau 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("injected failing verdict exits one") {
  const auto r = run_cli("verify alpha --p 2 --tau 1 --inject-fail");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("usage errors exit two") {
  CHECK(run_cli("verify nosuchsuite").exit_code == 2);
  CHECK(run_cli("invariant --knot torus:2,4 --color 1").exit_code == 2);
  CHECK(run_cli("invariant --knot klein --color 1").exit_code == 2);
  CHECK(run_cli("invariant --knot unknot --color x,1").exit_code == 2);
  CHECK(run_cli("--no-such-flag").exit_code == 2);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const std::string cmd = "invariant --knot torus:2,3 --color 2,1 --normalized";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));
  CHECK(a.out.find("\"engine\": \"skein/1\"") != std::string::npos);

  // worker count must not change the results, only the command echo
  const auto c = run_cli("verify sumchi --max-weight 5");
  const auto d = run_cli("verify sumchi --max-weight 5 --jobs 3");
  CHECK(strip_line(strip_wall_time(c.out), "\"command\"") ==
        strip_line(strip_wall_time(d.out), "\"command\""));
}

TEST_CASE("unnormalized invariant carries bracket denominators") {
  const auto r = run_cli("invariant --knot unknot --color 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("denominator_brackets") != std::string::npos);
}

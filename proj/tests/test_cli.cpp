#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  std::string out;
  int status = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(KNOWWH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(KNOWWH_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("check") {
  auto r = run_cli("check " + data("model_kv.json") + " --at w1 'Kv{1}(p,$c)'");
  CHECK(r.out == "false\n");
  CHECK(r.status == 1);
  r = run_cli("check " + data("model_kv.json") + " --at w1 'Kv{1}(F,$c)'");
  CHECK(r.out == "true\n");
  CHECK(r.status == 0);
  r = run_cli("check " + data("kh3.json") + " --at s1 'Kh(p, q)'");
  CHECK(r.out == "true\n");
  CHECK(r.status == 0);
  // nonexistent world
  r = run_cli("check " + data("model_kv.json") + " --at nowhere 'p'");
  CHECK(r.status == 2);
  // parse error
  r = run_cli("check " + data("model_kv.json") + " --at w1 'Kv{1}(p'");
  CHECK(r.status == 2);
  // fragment mismatch
  r = run_cli("check " + data("model_a.json") + " --at s 'Kh(p, q)'");
  CHECK(r.status == 2);
}

TEST_CASE("plan") {
  auto r = run_cli("plan " + data("kh3.json") + " --pre p --goal q");
  CHECK(r.out == "ru\n");
  CHECK(r.status == 0);
  r = run_cli("plan " + data("kh1.json") + " --pre p --goal q");
  CHECK(r.out == "no uniform plan\n");
  CHECK(r.status == 1);
  r = run_cli("plan " + data("kh2.json") + " --pre p --goal q --json");
  CHECK(r.out == "{\"known\":false}\n");
}

TEST_CASE("bisim") {
  std::string ab = data("model_a.json") + " s " + data("model_b.json") + " \"s'\"";
  auto r = run_cli("bisim " + ab);
  CHECK(r.out == "false\n");
  CHECK(r.status == 1);
  r = run_cli("bisim --delta " + ab);
  CHECK(r.out == "true\n");
  CHECK(r.status == 0);
}

TEST_CASE("update") {
  auto r = run_cli("update " + data("model_a.json") + " --announce p");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"worlds\"") != std::string::npos);
  auto before = run_cli("check " + data("model_a.json") + " --at s 'K{i} p'");
  CHECK(before.out == "true\n");

  r = run_cli("update " + data("model_kv.json") + " --inspect c --at w1");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"w2\"") == std::string::npos);

  // announcing something false everywhere is an error
  r = run_cli("update " + data("model_a.json") + " --announce F");
  CHECK(r.status == 2);

  r = run_cli("update " + data("model_a.json") + " --announce-whether 'Kw{i} p' --at s");
  CHECK(r.status == 0);
}

TEST_CASE("translate") {
  auto r = run_cli("translate --ncl-to-ml 'Kw{i} p'");
  CHECK(r.out == "(box{i} p | box{i} ~p)\n");
  r = run_cli("translate --ml-to-ncl 'box{i} p'");
  CHECK(r.out == "(p & Kw{i} p)\n");
  r = run_cli("translate --expand-diamond 'dia{i,$c}(p, q)'");
  CHECK(r.out.find("dia{i,$c}(p | q)") != std::string::npos);
  r = run_cli("translate --expand-diamond 'p & q'");
  CHECK(r.status == 2);
}

TEST_CASE("valid and frame-valid") {
  auto r = run_cli("valid 'Kw{i}p <-> Kw{i}~p' --frames arbitrary --max-worlds 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("valid-up-to-budget") == 0);

  r = run_cli("valid 'Kw{i}(p -> q) & Kw{i}p -> Kw{i}q' --frames arbitrary --max-worlds 2 "
              "--emit /tmp/knowwh_cm.json");
  CHECK(r.status == 1);
  auto replay = run_cli("check /tmp/knowwh_cm.json --at w0 'Kw{i}(p -> q) & Kw{i}p -> Kw{i}q'");
  CHECK(replay.out == "false\n");

  r = run_cli("frame-valid " + data("frame_f2.json") +
              " 'Kw{i}p & Kw{i}(p -> q) & p -> Kw{i}q'");
  CHECK(r.out == "valid\n");
  CHECK(r.status == 0);

  r = run_cli("valid 'p -> p' --frames bogus");
  CHECK(r.status == 2);
}

TEST_CASE("axioms") {
  auto r = run_cli("axioms --suite sncl-arbitrary --max-worlds 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("sncl-arbitrary: 4/4 items as expected") != std::string::npos);
  r = run_cli("axioms --suite skh --max-worlds 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("skh: 9/9 items as expected") != std::string::npos);
  r = run_cli("axioms --suite nope");
  CHECK(r.status == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const std::string& args : std::initializer_list<std::string>
       {std::string("check ") + data("model_kv.json") + " --at w1 'Kd{1}($c,$c)'",
        std::string("plan ") + data("kh3.json") + " --pre p --goal q --json",
        std::string("valid 'Kw{i}(p -> q) & Kw{i}p -> Kw{i}q' --max-worlds 2 --json"),
        std::string("axioms --suite s5 --max-worlds 2 --json"),
        std::string("update ") + data("model_kv.json") + " --inspect c --at w2"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }
}

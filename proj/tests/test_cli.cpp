#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dyadic/proofcheck.hpp"
#include "dyadic/serialize.hpp"

using namespace dyadic;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = quote(DYADIC_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string source(const std::string& rel) { return quote(std::string(DYADIC_SOURCE_DIR) + "/" + rel); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dyadic_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

Json read(const std::string& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

}  // namespace

TEST_F(Cli, DecideExitCodes) {
  EXPECT_EQ(run("decide 'O(q/p) -> O(q/p)'").status, 0);
  EXPECT_EQ(run("decide '[]p'").status, 1);
  EXPECT_EQ(run("decide 'p ->'").status, 2);
  EXPECT_EQ(run("decide").status, 2);
  EXPECT_EQ(run("decide 'p' --sequent 'p |- p'").status, 2);
  EXPECT_EQ(run("decide 'Bet p'").status, 2);
  EXPECT_EQ(run("decide 'Bet p' --allow-bet").status, 1);
}

TEST_F(Cli, ParseErrorsCarryPosition) {
  const auto r = run("decide 'p -> (q'", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("column"), std::string::npos) << r.out;
}

TEST_F(Cli, StepCapIsAnError) {
  const auto r = run("decide 'O(q -> r/p) -> (O(q/p) -> O(r/p))' --max-steps 3", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("step cap"), std::string::npos) << r.out;
  ::setenv("DYADIC_MAX_STEPS", "3", 1);
  const auto env = run("decide 'O(q -> r/p) -> (O(q/p) -> O(r/p))'");
  ::unsetenv("DYADIC_MAX_STEPS");
  EXPECT_EQ(env.status, 2);
}

TEST_F(Cli, GentleMurderModelVerifies) {
  const auto m = path("m.json");
  const auto r = run("decide --sequent 'O(~k/true), O(g/k), [](g->k), k |- false' --self-check --emit-model " + quote(m));
  EXPECT_EQ(r.status, 1);
  const auto model = model_from_json(read(m));
  for (const char* f : {"O(~k/true)", "O(g/k)", "[](g -> k)"}) {
    EXPECT_EQ(run("eval " + quote(m) + " " + quote(f)).status, 0) << f;
  }
  EXPECT_TRUE(is_valid_in(model, parse("O(g/k)")));
}

TEST_F(Cli, EmitProofChecks) {
  const auto p = path("p.json");
  EXPECT_EQ(run("decide '~[]p -> []~[]p' --emit-proof " + quote(p)).status, 0);
  EXPECT_TRUE(check(proof_from_json(read(p)), CheckedCalculus::HEPlus).ok);
  EXPECT_EQ(run("check-proof " + quote(p)).status, 0);
  EXPECT_EQ(run("decide '[]p' --emit-proof " + quote(p)).status, 2);
}

TEST_F(Cli, CheckProofOnFixturesAndTruncation) {
  EXPECT_EQ(run("check-proof --calculus cut " + source("fixtures/s5_derivation.json")).status, 0);
  EXPECT_EQ(run("check-proof --calculus cut " + source("fixtures/cok_derivation.json")).status, 0);
  EXPECT_EQ(run("check-proof " + source("fixtures/s5_derivation.json")).status, 1);

  auto j = read(std::string(DYADIC_SOURCE_DIR) + "/fixtures/cok_derivation.json");
  j["children"][0]["children"] = Json::array();
  const auto t = path("truncated.json");
  std::ofstream(t) << j.dump();
  const auto r = run("check-proof --calculus cut " + quote(t));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("root.0"), std::string::npos) << r.out;

  const auto bad = path("bad.json");
  std::ofstream(bad) << "{\"conclusion\":";
  EXPECT_EQ(run("check-proof " + quote(bad)).status, 2);
  EXPECT_EQ(run("check-proof " + quote(path("missing.json"))).status, 2);
}

TEST_F(Cli, EvalReportsWorlds) {
  const auto r = run("eval " + source("fixtures/gentle_murder_model.json") + " 'O(g/k)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "world 1: true\nworld 2: true\nvalid\n");
  const auto k = run("eval " + source("fixtures/gentle_murder_model.json") + " k --format json");
  EXPECT_EQ(k.status, 1);
  const auto j = Json::parse(k.out);
  EXPECT_EQ(j["worlds"]["1"], true);
  EXPECT_EQ(j["worlds"]["2"], false);
  EXPECT_EQ(j["valid"], false);
}

TEST_F(Cli, CorpusRuns) {
  const auto r = run("corpus --self-check " + source("corpus/axioms.txt") + " " + source("corpus/paper-derivations.txt") +
                     " " + source("corpus/ctd-gentle-murder.txt") + " " + source("corpus/nonvalid-principles.txt"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("passed"), std::string::npos);

  const auto wrong = path("wrong.txt");
  std::ofstream(wrong) << "name: bad\ninput: []p\nexpect: proven\n";
  const auto w = run("corpus " + quote(wrong));
  EXPECT_EQ(w.status, 1);
  EXPECT_NE(w.out.find("FAIL bad"), std::string::npos) << w.out;
}

TEST_F(Cli, JsonOutputIsByteDeterministic) {
  for (const std::string& args : std::vector<std::string>{
           "decide 'O(q/p) -> O(q/p & r)' --format json --stats", "decide 'O(q -> r/p) -> (O(q/p) -> O(r/p))' --format json",
        "corpus --format json " + source("corpus/ctd-gentle-murder.txt"),
        "check-proof --format json --calculus cut " + source("fixtures/cok_derivation.json"),
        "eval --format json " + source("fixtures/gentle_murder_model.json") + " 'O(~k/true)'"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, b.status) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_TRUE(Json::accept(a.out)) << args;
  }
  const auto p1 = path("p1.json"), p2 = path("p2.json");
  run("decide 'O(q -> r/p) -> (O(q/p) -> O(r/p))' --emit-proof " + quote(p1));
  run("decide 'O(q -> r/p) -> (O(q/p) -> O(r/p))' --emit-proof " + quote(p2));
  std::ifstream f1(p1), f2(p2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  EXPECT_EQ(s1.str(), s2.str());
}

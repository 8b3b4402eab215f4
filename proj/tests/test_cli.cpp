#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into the output.
Result cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + SKEIN_CLI + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status), out};
}

}  // namespace

TEST(Cli, ContextAtEight) {
  Result r = cli("ctx --root 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "N=8\nn=2\nt=1\ntHalf=-1\nq=z^2\n");
  auto j = nlohmann::json::parse(cli("ctx --root 12 --json").out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["t"], -1);
}

TEST(Cli, EvalJwTwoGeneric) {
  Result r = cli("eval --expr 'jw(2)'");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 2u);
  // e_1 with coefficient v^2 / (1 + v^4) = 1/[2], then the identity.
  EXPECT_EQ(j["terms"][0]["pairing"].dump(), "[1,0,3,2]");
  EXPECT_EQ(j["terms"][0]["coeff"].dump(), R"({"N":0,"num":{"2":"1"},"den":["1","0","0","0","1"]})");
  EXPECT_EQ(j["terms"][1]["pairing"].dump(), "[2,3,0,1]");
  EXPECT_EQ(j["terms"][1]["coeff"].dump(), R"({"N":0,"num":{"0":"1"},"den":["1"]})");
}

TEST(Cli, EvalJwTwoAtRoots) {
  // [2] = 1 at N = 12; [2] = 0 at N = 8, where no projector on 2 strands exists.
  Result r = cli("eval --root 12 --expr 'jw(2)'");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["terms"].size(), 2u);
  r = cli("eval --root 8 --expr 'jw(2)'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("BoxNotConstructible"), std::string::npos);
}

TEST(Cli, ExpressionFromFile) {
  const std::string path = testing::TempDir() + "expr.tl";
  std::ofstream(path) << "over(2,0) ;\nunder(2,0)\n";
  Result a = cli("eval --root 8 --expr " + path);
  Result b = cli("eval --root 8 --expr 'id(2)'");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MalformedInputExitsTwo) {
  for (const char* src : {"", "id(", "jw(2) ;", "[2 id(1)", ")(", "id(1) @@ id(1)", "encircle(1, x^)",
                          "cable(id(1), )", "999999999999999999999", "q^(1/3) id(1)"}) {
    Result r = cli(std::string("eval --expr '") + src + "'");
    EXPECT_EQ(r.code, 2) << src << ": " << r.out;
    EXPECT_NE(r.out.find("rror"), std::string::npos) << src;
  }
  Result r = cli("eval --expr 'id(2) ; id(3)'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("ElaborationError"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("ctx").code, 2);
  EXPECT_EQ(cli("ctx --root -3").code, 2);
  EXPECT_EQ(cli("jw --k two").code, 2);
  EXPECT_EQ(cli("verify --suite nope").code, 2);
  Result r = cli("ctx --rot 8");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, JwDumps) {
  Result a = cli("jw --k 3 --root 8 --json");
  Result b = cli("eval --root 8 --expr 'jw2n1'");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Result t = cli("jw --k 3 --root 8 --coeff-table");
  EXPECT_EQ(t.out, "{(0,1),(2,3),(4,5)}\t-1\n{(0,3),(1,4),(2,5)}\t1\n{(0,5),(1,2),(3,4)}\t-1\n");
}

TEST(Cli, VerifyIsDeterministic) {
  Result a = cli("verify --root 8 --suite all --json");
  Result b = cli("verify --root 8 --suite all --json");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  for (const auto& r : j) EXPECT_EQ(r["outcome"], "pass") << r.dump();
  const std::string path = testing::TempDir() + "report.json";
  Result c = cli("verify --root 8 --report " + path);
  EXPECT_EQ(c.code, 0);
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in), j);
}

TEST(Cli, BudgetFromEnvironment) {
  Result r = cli("verify --root 8", "SKEIN_TIME_BUDGET_SECS=0.000001");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("time budget exhausted"), std::string::npos);
}

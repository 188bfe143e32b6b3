#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "gpg/rational.hpp"

#ifndef GPG_CLI_PATH
#error "GPG_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GPG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, EvalGenocchi) {
  const auto r = run("eval --n 2 --k 1 --alpha 1 --lambda 1 --rho 0 --u -1 --log-a 0 --log-b 1 --x 0 --y 0 --z 0");
  ASSERT_EQ(r.status, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["command"], "eval");
  EXPECT_EQ(j["value"], "-1");
  EXPECT_EQ(j["params"]["lambda"], "1");
}

TEST(Cli, EvalZeroPrefixAndZeroNumerator) {
  EXPECT_EQ(parse(run("eval --n 0 --alpha 2 --x 1/2"))["value"], "0");
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(parse(run("eval --n " + std::to_string(n) + " --u 1 --lambda 3 --x 2"))["value"], "0");
}

TEST(Cli, BaseSugarMatchesLogFlags) {
  EXPECT_EQ(run("eval --n 4 --a 1 --b e --rho 1/2").out, run("eval --n 4 --log-a 0 --log-b 1 --rho 1/2").out);
  EXPECT_EQ(run("eval --n 4 --b x").status, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("eval --n 2 --lambda 1 --u 1").status, 3);
  EXPECT_EQ(run("poly --n 2 --lambda 2 --u 2").status, 3);
  EXPECT_EQ(run("eval --n 2 --rho 1/0").status, 2);
  EXPECT_EQ(run("eval --n 2 --x 0.5").status, 2);
  EXPECT_EQ(run("eval").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify --suite nosuch").status, 2);
  EXPECT_EQ(run("table --family nosuch").status, 2);
  EXPECT_EQ(run("eval --n 2 --alpha 0").status, 2);
}

TEST(Cli, TableCsvAndJson) {
  const auto csv = run("table --family hermite3 --n-max 3 --x 1 --y 1 --z 1 --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out, "n,value\n0,1\n1,1\n2,3\n3,13\n");
  const auto j = parse(run("table --family genocchi --n-max 4"));
  std::vector<std::string> values;
  for (const auto& row : j["results"]) values.push_back(row["value"]);
  EXPECT_EQ(values, (std::vector<std::string>{"0", "1", "-1", "0", "1"}));
}

TEST(Cli, DefaultOrderFromEnvironment) {
  const auto j = parse(run("table --family genocchi"));
  EXPECT_EQ(j["results"].size(), 11u);
  setenv("GPG_DEFAULT_ORDER", "3", 1);
  EXPECT_EQ(parse(run("table --family genocchi"))["results"].size(), 4u);
  EXPECT_EQ(parse(run("table --family genocchi --n-max 5"))["results"].size(), 6u);
  setenv("GPG_DEFAULT_ORDER", "x", 1);
  EXPECT_EQ(run("table --family genocchi").status, 2);
  unsetenv("GPG_DEFAULT_ORDER");
}

TEST(Cli, PolySortedWithOracle) {
  const auto r = run("poly --n 3 --k 2 --rho 1/2 --lambda 2 --u 1/3 --oracle");
  ASSERT_EQ(r.status, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["oracle_match"], true);
  std::vector<std::array<unsigned, 3>> mons;
  for (const auto& t : j["results"]) {
    mons.push_back({t["monomial"][0], t["monomial"][1], t["monomial"][2]});
    const std::string c = t["coeff"];
    EXPECT_EQ(gpg::Rational::parse(c).str(), c);
  }
  ASSERT_FALSE(mons.empty());
  for (std::size_t i = 1; i < mons.size(); ++i) {
    const unsigned d0 = mons[i - 1][0] + mons[i - 1][1] + mons[i - 1][2];
    const unsigned d1 = mons[i][0] + mons[i][1] + mons[i][2];
    EXPECT_TRUE(d0 < d1 || (d0 == d1 && mons[i - 1] < mons[i]));
  }
  EXPECT_TRUE(parse(run("poly --n 1 --alpha 2"))["results"].empty());
}

TEST(Cli, VerifyAndReduce) {
  const auto r = run("verify --suite reductions --n-max 10 --seed 42");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["report"]["passed"], true);
  const auto e = run("verify --suite explicit --trials 20 --seed 7");
  EXPECT_EQ(e.status, 0);
  EXPECT_FALSE(parse(e)["report"]["deviations"].empty());
  EXPECT_EQ(run("reduce --item 4 --k 2 --rho 1/3 --x 1").status, 0);
  EXPECT_EQ(run("reduce --item 9").status, 2);
}

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GALOIS_SPAN_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(GALOIS_SPAN_DATA_DIR) + "/" + file; }

}  // namespace

TEST(Cli, KernelFormulaFromFixtures) {
  const CliRun r = run("verify kuroda --base " + data("bouquet2.json") + " --voltage " + data("c2xc6_voltage.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["details"]["kappa_Y"], "117600");
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Cli, CyclicFormulaWithLcmMultiplier) {
  const CliRun r = run("verify brauer-kuroda --voltage " + data("s3_voltage.json") + " --multiplier lcm");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["details"]["kappa_Y"], "294");
}

TEST(Cli, GroupInfo) {
  const CliRun r = run("group info S3");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], "6");
  EXPECT_EQ(j["irreducibly_represented"], true);
  EXPECT_EQ(j["exceptional"], false);
  EXPECT_EQ(j["character_table"]["characters"].size(), 3u);
}

TEST(Cli, DeterminantOfM) {
  const CliRun r = run("family det-m --p 2 --s 2");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["det"], "-1/4");
  EXPECT_EQ(j["sign_matches_paper"], false);
}

TEST(Cli, FamilyDegree) {
  const CliRun r = run("family degree --p 2,3 --s 1,1 --b 0,1 --a 1,1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["degrees"][0]["degree"], "3");
}

TEST(Cli, Intermediates) {
  const CliRun r = run("cover intermediates --voltage " + data("s3_voltage.json") + " --subgroup \"(1 2 3)\"");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["intermediates"][0]["kappa"], "2");
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "verify kuroda --group Q8 --base bouquet:3 --seed 4";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify").status, 2);
  EXPECT_EQ(run("family det-m --p 2").status, 2);
  EXPECT_EQ(run("group info NotAGroup").status, 2);
  EXPECT_EQ(run("verify euler-zero --group C2^2 --base cycle:4").status, 2);
}

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

#ifndef SIPQ_BIN
#error "SIPQ_BIN must name the sipq executable"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(SIPQ_BIN) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expected_code) << args;
  return nlohmann::json::parse(r.out);
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Cli, EnumerateG1) {
  const auto j = run_json("enumerate --class g1 --weight 5");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "enumerate");
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["partition"], nlohmann::json({5}));
  EXPECT_EQ(j["results"][1]["partition"], nlohmann::json({3, 2}));
}

TEST(Cli, EnumerateEmptyAndBasis) {
  const auto all = run_json("enumerate --class all --weight 0");
  ASSERT_EQ(all["results"].size(), 1u);
  EXPECT_TRUE(all["results"][0]["partition"].empty());
  const auto b = run_json("enumerate --class basis-g2 --weight 2");
  ASSERT_EQ(b["results"].size(), 1u);
  EXPECT_EQ(b["results"][0]["partition"], nlohmann::json({2}));
}

TEST(Cli, Decompose) {
  const auto j = run_json("decompose --class g1 --partition 11,8,7,4");
  EXPECT_EQ(j["results"]["beta"], nlohmann::json({5, 4, 3, 2}));
  EXPECT_EQ(j["results"]["mu"], nlohmann::json({6, 4, 4, 2}));
  EXPECT_EQ(run("decompose --class g1 --partition 4,x").code, 2);
  EXPECT_EQ(run("decompose --class g1 --partition 3,5").code, 2);
}

TEST(Cli, SeriesCoefficientsAreStrings) {
  const auto j = run_json("series --spec boulet-p --side product --trunc 4");
  const auto& terms = j["results"]["terms"];
  ASSERT_EQ(terms.size(), 11u);
  bool found = false;
  for (const auto& t : terms) {
    EXPECT_TRUE(t["coeff"].is_string());
    if (t["ea"] == 2 && t["eb"] == 1 && t["ec"] == 1 && t["ed"] == 0) {
      EXPECT_EQ(t["coeff"], "2");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, TableCsv) {
  const CliRun r = run("table --basis g1 --method closed-form --n-max 2 --h-max 2 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 10u);  // header + 9 rows
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "class,method,n,h,polynomial");
  EXPECT_NE(r.out.find("basis-g1,closed-form,1,2,a*b\n"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify g1-four --trunc 0").code, 0);
  EXPECT_EQ(run("verify no-such-id").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify g1-four --trunc -3").code, 2);
  EXPECT_EQ(run("enumerate --class nope --weight 3").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, TruncFromEnvironment) {
  const CliRun r = run("verify altsum-g2", "SIPQ_TRUNC=7");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["params"]["trunc"], 7);
  const CliRun flag = run("verify altsum-g2 --trunc 5", "SIPQ_TRUNC=7");
  EXPECT_EQ(nlohmann::json::parse(flag.out)["params"]["trunc"], 5);
}

TEST(Cli, VerifyAllIsDeterministic) {
  const CliRun a = run("verify --all --trunc 12");
  const CliRun b = run("verify --all --trunc 12");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_GT(j["results"].size(), 18u);
  for (const auto& r : j["results"]) EXPECT_EQ(r["status"], "pass") << r.dump();
}

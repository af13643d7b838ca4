#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(TOPREC_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& f) { return std::string(TOPREC_DATA) + "/" + f; }

}  // namespace

TEST(Cli, ComputeWeilPeterssonTorus) {
  CliResult r = run("compute --curve weil-petersson --g 1 --n 1 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["g"], 1);
  EXPECT_EQ(j["kernel"], "general");
  EXPECT_NE(r.out.find("1/8"), std::string::npos);
  EXPECT_NE(r.out.find("p/12"), std::string::npos);
}

TEST(Cli, ComputeFreeEnergyAndProbe) {
  CliResult r = run("compute --curve weil-petersson --g 2 --n 0 --probe 2 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-43/2160"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("probes"));
}

TEST(Cli, ComputeFromCurveFile) {
  CliResult a = run("compute --curve-file " + data("lambert.json") + " --g 0 --n 3 --format csv");
  CliResult b = run("compute --curve lambert --g 0 --n 3 --format csv");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(run("compute --curve lambert --g 0 --n 3 --kernel printed --format pretty").code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  std::string args = "compute --curve maps-quad --g 1 --n 2 --format json";
  CliResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, InvalidInputsExitOne) {
  EXPECT_EQ(run("compute --curve-file " + data("bad_cusp.json") + " --g 0 --n 3").code, 1);
  EXPECT_EQ(run("compute --curve airy --g 0 --n 2").code, 1);
  EXPECT_EQ(run("compute --curve nosuch --g 0 --n 3").code, 1);
  EXPECT_EQ(run("compute --curve airy --g 0 --n 3 --kernel printed").code, 1);
  EXPECT_EQ(run("compute --curve airy --g 0 --n 3 --format xml").code, 1);
  EXPECT_EQ(run("extract --curve maps-quad --g 1 --faces 3 --marked 3").code, 1);
}

TEST(Cli, Catalog) {
  CliResult r = run("catalog --format json");
  ASSERT_EQ(r.code, 0);
  for (const char* name : {"airy", "weil-petersson", "lambert", "maps-quad"}) EXPECT_NE(r.out.find(name), std::string::npos);
}

TEST(Cli, Extract) {
  CliResult h = run("extract --curve lambert --g 1 --n 1 --degree 4 --format csv");
  ASSERT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("640"), std::string::npos);
  CliResult m = run("extract --curve maps-quad --g 0 --faces 3 --format json");
  ASSERT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("54"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  CliResult ok = run("check --suite 1 --format json");
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["pass"].get<bool>());
  EXPECT_EQ(run("check --suite 3 --format csv").code, 3);
}

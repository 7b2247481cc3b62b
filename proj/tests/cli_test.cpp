// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "specbound_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Result specbound(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string("\"") + SPECBOUND_EXE + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream s;
  s << in.rdbuf();
  r.out = s.str();
  return r;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

} // namespace

TEST(Cli, OracleRectangle) {
  const Result r = specbound("oracle --domain rectangle --count 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "index,lambda\n1,2\n2,5\n3,5\n4,8\n");
}

TEST(Cli, CheckPassesOnOracleSpectra) {
  for (const std::string& spec : {std::string("rectangle --a 1 --b 2"), std::string("ball --n 3"),
                                  std::string("ball --n 2")}) {
    const Result o = specbound("oracle --domain " + spec + " --count 20");
    ASSERT_EQ(o.code, 0);
    const fs::path p = write("oracle.csv", o.out);
    const std::string n = spec.find("--n 3") != std::string::npos ? "3" : "2";
    EXPECT_EQ(specbound("check --spectrum " + p.string() + " --n " + n + " --h0sq 0 --kmax 19").code, 0) << spec;
  }
  const Result hemi = specbound("oracle --domain hemisphere --count 16");
  const fs::path p = write("hemi.csv", hemi.out);
  EXPECT_EQ(specbound("check --spectrum " + p.string() + " --n 2 --h0sq 1 --kmax 15").code, 0);
  EXPECT_EQ(specbound("check --spectrum " + p.string() + " --n 2 --h0sq 1 --geometry sphere --kmax 15").code, 0);
}

TEST(Cli, CheckReportsYangViolation) {
  const fs::path p = write("bad.csv", "1\n10\n");
  const Result r = specbound("check --spectrum " + p.string() + " --n 2 --h0sq 0 --kmax 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("spectrum,0,quadratic_gap_flat,1,,81,18,-63,false,exact"), std::string::npos);
}

TEST(Cli, UsageAndIoErrorsExitOne) {
  EXPECT_EQ(specbound("").code, 1);
  EXPECT_EQ(specbound("oracle --domain rectangle --count 4 --frobnicate").code, 1);
  EXPECT_EQ(specbound("oracle --domain torus --count 4").code, 1);
  EXPECT_EQ(specbound("check --spectrum /nonexistent.csv --n 2 --h0sq 0 --kmax 1").code, 1);
  const fs::path p = write("ok.csv", "2\n5\n5\n");
  EXPECT_EQ(specbound("check --spectrum " + p.string() + " --n 2 --h0sq 1 --minimal --kmax 1").code, 1);
  EXPECT_EQ(specbound("solve --config /nonexistent.json --out " + scratch().string()).code, 1);
  EXPECT_EQ(specbound("--help").code, 0);
}

TEST(Cli, SolveAndConvergence) {
  const fs::path cfg = write("small.json", R"({"domains": [
    {"id": "sq", "geometry": {"chart": "flat", "region": {"rectangle": [0, "pi", 0, "pi"]}},
     "h": "pi/16", "refinements": 1, "eigen_count": 6, "h0_sq": "zero", "kmax": 3},
    {"id": "hemi", "geometry": {"analytic": "hemisphere"}, "eigen_count": 6, "h0_sq": "computed"}]})");
  const fs::path out = scratch() / "solve";
  const Result r = specbound("solve --config " + cfg.string() + " --out " + out.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(out / "report.csv"));
  EXPECT_TRUE(fs::exists(out / "report.json"));
  EXPECT_TRUE(fs::exists(out / "convergence.csv"));

  const Result c = specbound("convergence --config " + cfg.string() + " --levels 3");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("sq,1,2,"), std::string::npos);
  EXPECT_EQ(c.out.find("hemi"), std::string::npos);

  const fs::path broken = write("broken.json", R"({"domains": [
    {"id": "bad", "geometry": {"chart": "flat", "domain": [0, 1, 0, 1], "region": {"rectangle": [0, 2, 0, 1]}}, "h": 0.1}]})");
  EXPECT_EQ(specbound("solve --config " + broken.string() + " --out " + out.string()).code, 2);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "divlab/commands.hpp"

using namespace divlab;
namespace fs = std::filesystem;

namespace {

RunConfig base(const std::string& cover) {
  RunConfig c;
  c.cover = cover;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("divlab_test_" + name);
  fs::remove_all(p);
  return p;
}

struct Run {
  int rc;
  std::string out;
};

Run run_cli(const std::string& args) {
  fs::path log = scratch("cli_stdout.txt");
  std::string cmd = std::string(DIVLAB_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  int st = std::system(cmd.c_str());
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(log)};
}

}  // namespace

TEST(Config, ParsesKeyValueText) {
  auto kv = parse_config_text("# experiment\ncover = u^2 - t*(t-1)\n\nx = 1e5  # scale\nmode=override\n");
  EXPECT_EQ(kv.at("cover"), "u^2 - t*(t-1)");
  EXPECT_EQ(kv.at("x"), "1e5");
  EXPECT_EQ(kv.at("mode"), "override");
  EXPECT_THROW(parse_config_text("cover u^2\n"), ConfigError);
  RunConfig c;
  EXPECT_THROW(apply_config_key(c, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_config_key(c, "N", "12.5"), ConfigError);
  EXPECT_THROW(apply_config_key(c, "mode", "fast"), ConfigError);
  apply_config_key(c, "N", "1e4");
  EXPECT_EQ(c.N, 10000u);
}

TEST(Config, ValidationRules) {
  RunConfig c = base("u^2 - t");
  EXPECT_NO_THROW(c.validate());
  c.k = 2;
  EXPECT_THROW(c.validate(), ConfigError);  // override key in paper mode
  c.mode = ParamMode::override;
  EXPECT_NO_THROW(c.validate());
  c.limit = 10;
  EXPECT_THROW(c.validate(), ConfigError);  // limit < x
  RunConfig e;
  EXPECT_THROW(e.validate(), ConfigError);
}

TEST(Commands, AnalyzeExamples) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze(base("u^2 - t"), out, err), 0);
  EXPECT_NE(out.str().find("F: T\n"), std::string::npos);
  EXPECT_NE(out.str().find("d: 1\n"), std::string::npos);
  EXPECT_NE(out.str().find("delta_hat: 1\n"), std::string::npos);

  std::ostringstream o2, e2;
  EXPECT_EQ(cmd_analyze(base("u^2 - t^3 + 3*t^2 - 2*t"), o2, e2), 0);
  EXPECT_NE(o2.str().find("F: T^3 - 3*T^2 + 2*T\n"), std::string::npos);
  EXPECT_NE(o2.str().find("d: 3\n"), std::string::npos);

  std::ostringstream o3, e3;
  EXPECT_EQ(cmd_analyze(base("u^2 - t +* 3"), o3, e3), 1);
  EXPECT_NE(e3.str().find("parse"), std::string::npos);

  std::ostringstream o4, e4;
  EXPECT_EQ(cmd_analyze(base("u^2 - 2"), o4, e4), 2);  // no finite critical value
}

TEST(Commands, WitnessOverrideExample) {
  RunConfig c = base("u^2 - t^2 - 1");
  c.mode = ParamMode::override;
  c.k = 1;
  c.y = 5;
  c.tail = 0;
  c.window_lo = 50;
  c.window_hi = 100;
  c.limit = 10000;
  c.out = scratch("witness").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_witness(c, out, err), 0) << err.str();
  EXPECT_EQ(slurp(fs::path(c.out) / "witnesses.csv"),
            "m,factorization,n_m,shift_l,greedy\n65,5*13,8,0,true\n85,5*17,13,0,true\n");
  EXPECT_NE(out.str().find("greedy: 2\n"), std::string::npos);

  // explicit d changes the 12d comparison
  c.d = 5;
  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_witness(c, o2, e2), 0);
  EXPECT_NE(o2.str().find("MF_over_12d: 0.0333333"), std::string::npos);
}

TEST(Commands, WitnessPaperModeEmpty) {
  RunConfig c = base("u^2 - t^2 - 1");
  c.x = 1e6;
  c.out = scratch("witness_paper").string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_witness(c, out, err), 0);
  EXPECT_NE(err.str().find("warning"), std::string::npos);
  EXPECT_EQ(slurp(fs::path(c.out) / "witnesses.csv"), "m,factorization,n_m,shift_l,greedy\n");
}

TEST(Commands, DiversityExamples) {
  RunConfig c = base("u^2 - t");
  c.N = 100;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_diversity(c, out, err), 0);
  EXPECT_NE(out.str().find("reducible_count=10\n"), std::string::npos);
  EXPECT_NE(out.str().find("distinct_lower_bound=60\n"), std::string::npos);
  c.N = 10000;
  std::ostringstream o2, e2;
  EXPECT_EQ(cmd_diversity(c, o2, e2), 0);
  EXPECT_NE(o2.str().find("distinct_lower_bound=6082\n"), std::string::npos);
  c.N = 5;
  std::ostringstream o3, e3;
  EXPECT_EQ(cmd_diversity(c, o3, e3), 1);
}

TEST(Commands, VerifySuites) {
  for (const char* cover : {"u^2 - t", "u^2 - t*(t-1)*(t-2)"}) {
    RunConfig c = base(cover);
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify(c, out, err), 0) << out.str() << err.str();
    EXPECT_NE(out.str().find("overall: PASS"), std::string::npos);
  }
  RunConfig f = base("u^2 - t^2 - 1");
  f.inject_fault = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(f, out, err), 0) << out.str() << err.str();
  EXPECT_EQ(out.str().find(" 0 rejected"), std::string::npos);
}

TEST(Commands, OutputsIdenticalAcrossWorkers) {
  auto produce = [](unsigned workers, const std::string& tag) {
    RunConfig c = base("u^2 - t^3 + 3*t^2 - 2*t");
    c.mode = ParamMode::override;
    c.x = 1e5;
    c.k = 1;
    c.y = 3;
    c.tail = 0.5;
    c.N = 2000;
    c.workers = workers;
    c.out = scratch(tag).string();
    std::ostringstream o, e;
    EXPECT_EQ(cmd_witness(c, o, e), 0);
    EXPECT_EQ(cmd_sieve(c, o, e), 0);
    RunConfig d = c;
    d.mode = ParamMode::paper;
    d.k.reset();
    d.y.reset();
    d.tail.reset();
    EXPECT_EQ(cmd_diversity(d, o, e), 0);
    return c.out;
  };
  fs::path a = produce(1, "w1"), b = produce(3, "w3"), a2 = produce(1, "w1b");
  for (const char* f : {"witnesses.csv", "cliques.csv", "mf.csv", "census.csv"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(a2 / f)) << f;
    EXPECT_GT(slurp(a / f).size(), 20u) << f;
  }
}

TEST(Binary, ExitCodesAndFlagPrecedence) {
  EXPECT_EQ(run_cli("analyze --cover \"u^2 - t\"").rc, 0);
  EXPECT_EQ(run_cli("analyze --cover \"u^2 - t.5\"").rc, 1);
  EXPECT_EQ(run_cli("analyze --cover \"u - t\"").rc, 2);
  EXPECT_EQ(run_cli("diversity --cover \"u^2 - t\" --N 5").rc, 1);
  EXPECT_EQ(run_cli("bogus").rc, 1);
  EXPECT_EQ(run_cli("sieve --cover \"u^2 - t\" --k 2").rc, 1);  // override key in paper mode

  fs::path cfg = scratch("run.cfg");
  std::ofstream(cfg) << "cover = u^2 - t\nN = 400\n";
  auto from_file = run_cli("diversity --config " + cfg.string());
  EXPECT_EQ(from_file.rc, 0);
  EXPECT_NE(from_file.out.find("N=400"), std::string::npos);
  auto flag_wins = run_cli("diversity --config " + cfg.string() + " --N 100");
  EXPECT_NE(flag_wins.out.find("N=100"), std::string::npos);
  EXPECT_NE(flag_wins.out.find("reducible_count=10"), std::string::npos);
}

TEST(Binary, WorkersFromEnvironment) {
  setenv("DIVLAB_WORKERS", "3", 1);
  EXPECT_EQ(workers_from_env(), 3u);
  auto r = run_cli("diversity --cover \"u^2 - t\" --N 100");
  EXPECT_EQ(r.rc, 0);
  unsetenv("DIVLAB_WORKERS");
  EXPECT_EQ(workers_from_env(), 1u);
}

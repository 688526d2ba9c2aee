#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kfreq/experiments.hpp"

using namespace kfreq;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("kfreq_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(KFREQ_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the provenance line, which records the flags.
std::string body(const fs::path& p) {
  const auto s = slurp(p);
  return s.substr(s.find('\n') + 1);
}

}  // namespace

TEST(Parsing, RangeAndRandom) {
  EXPECT_EQ(parse_range("4..8"), std::make_pair(4, 8));
  EXPECT_THROW(parse_range("8..4"), std::invalid_argument);
  EXPECT_THROW(parse_range("4-8"), std::invalid_argument);
  EXPECT_EQ(parse_random_spec("12,7"), std::make_pair(12, std::uint64_t{7}));
  EXPECT_THROW(parse_random_spec("12"), std::invalid_argument);
}

TEST(Config, ExactlyOneSource) {
  RunConfig cfg;
  EXPECT_THROW(load_instance(cfg), std::invalid_argument);
  cfg.random = {8, 1};
  cfg.instance_path = "x.tsp";
  EXPECT_THROW(load_instance(cfg), std::invalid_argument);
  cfg.instance_path.reset();
  cfg.perturb = "auto";
  EXPECT_TRUE(load_instance(cfg).perturbation().has_value());
  cfg.perturb = "-1";
  EXPECT_THROW(load_instance(cfg), std::invalid_argument);
}

TEST(Config, ErrorClasses) {
  EXPECT_EQ(classify_error(ParseError("x")), ExitCode::Input);
  EXPECT_EQ(classify_error(LimitExceeded("x")), ExitCode::Limit);
  EXPECT_EQ(classify_error(OutputError("x")), ExitCode::Output);
  EXPECT_EQ(classify_error(std::invalid_argument("x")), ExitCode::Usage);
  EXPECT_EQ(classify_error(std::logic_error("x")), ExitCode::Internal);
}

TEST(Cli, ExitCodes) {
  TempDir d;
  EXPECT_EQ(run_cli("--version"), 0);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("bogus"), 2);
  EXPECT_EQ(run_cli("freqgraph --random 8,1 --out " + d.str()), 0);
  EXPECT_EQ(run_cli("freqgraph --instance /nonexistent.tsp --out " + d.str()), 3);
  EXPECT_EQ(run_cli("freqgraph --random 30,1 --out " + d.str()), 4);
  EXPECT_EQ(run_cli("freqgraph --random 8,1 --out " + d.str() + "/missing"), 5);
  EXPECT_EQ(run_cli("idsolve"), 2);
  EXPECT_EQ(run_cli("idsolve --n 100"), 0);
}

TEST(Cli, SolveReportsNonHamiltonianSurvivors) {
  // this seed leaves vertex 5 with one surviving edge
  TempDir d;
  EXPECT_EQ(run_cli("solve --random 9,1 --perturb auto --out " + d.str()), 6);
  EXPECT_TRUE(fs::exists(d.path() / "sparse.txt"));
}

TEST(Cli, FreqgraphFiles) {
  TempDir d;
  ASSERT_EQ(run_cli("freqgraph --instance " KFREQ_TEST_DATA "/square5.tsp --perturb auto --out " + d.str()), 0);
  const auto text = slurp(d.path() / "freqgraph.csv");
  EXPECT_EQ(text.rfind("# kfreq 0.1.0, seed=0, flags=", 0), 0u);
  EXPECT_NE(text.find("rank,freq,is_ohc,is_min_ohc,u,v"), std::string::npos);
  EXPECT_TRUE(fs::exists(d.path() / "vertex_split.csv"));
}

TEST(Cli, DeterministicOutputs) {
  TempDir a, b;
  const std::string args = "trajectory --random 9,4 --perturb auto --i-range 4..6 --samples 5 --seed 3";
  ASSERT_EQ(run_cli(args + " --out " + a.str()), 0);
  ASSERT_EQ(run_cli(args + " --workers 2 --out " + b.str()), 0);
  EXPECT_EQ(body(a.path() / "trajectory.csv"), body(b.path() / "trajectory.csv"));
}

TEST(Commands, SparsifyDecrementAndThreshold) {
  TempDir d;
  RunConfig cfg;
  cfg.command = "sparsify";
  cfg.random = {9, 2};
  cfg.perturb = "auto";
  cfg.exhaustive = true;
  cfg.i_range = {4, 6};
  cfg.out_dir = d.str();
  const auto res = run_command(cfg);
  EXPECT_TRUE(fs::exists(d.path() / "verdicts.csv"));
  EXPECT_TRUE(fs::exists(d.path() / "sparse.txt"));
  EXPECT_TRUE(fs::exists(d.path() / "candidates.txt"));

  cfg.mode = "threshold";
  EXPECT_THROW(run_command(cfg), std::invalid_argument);  // needs --i
  cfg.i = 5;
  cfg.rule = "fixed";
  cfg.value = 0;
  EXPECT_NO_THROW(run_command(cfg));
  cfg.rule = "kth";
  EXPECT_THROW(run_command(cfg), std::invalid_argument);  // needs a tour
}

TEST(Commands, AnalyticsWritesCurves) {
  TempDir d;
  RunConfig cfg;
  cfg.command = "analytics";
  cfg.n = 120;
  cfg.residual_corrected = true;
  cfg.out_dir = d.str();
  const auto res = run_command(cfg);
  for (const char* f : {"curve_p.csv", "curve_pd.csv", "curve_J.csv", "minid.csv", "summary.csv",
                        "constants.csv"})
    EXPECT_TRUE(fs::exists(d.path() / f)) << f;
  EXPECT_NE(slurp(d.path() / "minid.csv").find("i_d_residual"), std::string::npos);
  EXPECT_NE(res.summary.find("i_d="), std::string::npos);
}

TEST(Commands, SampleNeedsTour) {
  TempDir d;
  RunConfig cfg;
  cfg.command = "sample";
  cfg.random = {9, 2};
  cfg.out_dir = d.str();
  EXPECT_THROW(run_command(cfg), std::invalid_argument);
}

#include "lca/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lca/gf2.hpp"
#include "lca/grid.hpp"
#include "lca/rulematrix.hpp"

namespace lca {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("lca_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, StepFig2) {
  const std::string in = write("fig2.txt", "0010\n1110\n1011\n");
  const Result r = run_cli({"step", "--rule", "170", "--in", in});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1011\n0010\n1101\n");
}

TEST_F(CliTest, StepToFileThenIdentity) {
  const std::string in = write("fig2.pbm", "P1\n4 3\n0 0 1 0\n1 1 1 0\n1 0 1 1\n");
  const std::string out = (dir_ / "next.txt").string();
  EXPECT_EQ(run_cli({"step", "--rule", "170", "--in", in, "--out", out}).status, 0);
  EXPECT_EQ(slurp(out), "1011\n0010\n1101\n");
  const Result again = run_cli({"step", "--rule", "1", "--in", out});
  EXPECT_EQ(again.out, slurp(out));
}

TEST_F(CliTest, Evolve) {
  const std::string in = write("fig2.txt", "0010\n1110\n1011\n");
  EXPECT_EQ(run_cli({"evolve", "--rule", "170", "--in", in, "--steps", "2"}).out, "0001\n0011\n1110\n");
  EXPECT_EQ(run_cli({"evolve", "--rule", "170", "--in", in, "--steps", "1", "--all"}).out,
            "0010\n1110\n1011\n\n1011\n0010\n1101\n");
  EXPECT_EQ(run_cli({"evolve", "--rule", "170", "--in", in, "--steps", "0"}).out, "0010\n1110\n1011\n");
}

TEST_F(CliTest, Info) {
  const Result r = run_cli({"info", "171"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("171 = 1 + 2 + 8 + 32 + 128\n"), std::string::npos);
  EXPECT_NE(r.out.find("binary: 010101011\n"), std::string::npos);
  EXPECT_NE(r.out.find("transpose partner rule: 171\n"), std::string::npos);
  EXPECT_NE(r.out.find("128          top           (-1,0)         8\n"), std::string::npos);
  EXPECT_NE(run_cli({"info", "0"}).out.find("0 = 0\n"), std::string::npos);
  EXPECT_NE(run_cli({"info", "7"}).out.find("transpose partner rule: 97\n"), std::string::npos);
}

TEST_F(CliTest, MatrixCoords) {
  const Result r = run_cli({"matrix", "--rule", "1", "--rows", "2", "--cols", "3", "--format", "coords"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "# rule 1 rows 2 cols 3 dim 6\n0 0\n1 1\n2 2\n3 3\n4 4\n5 5\n");
}

TEST_F(CliTest, MatrixDenseMatchesStep) {
  // matrix output applied externally equals the step subcommand.
  const std::string out = (dir_ / "m.txt").string();
  ASSERT_EQ(run_cli({"matrix", "--rule", "170", "--rows", "3", "--cols", "4", "--out", out}).status, 0);
  std::ifstream in(out);
  const auto [header, m] = read_dense_matrix(in);
  EXPECT_EQ(header.rule, 170);
  const Grid g = parse_grid("0010\n1110\n1011\n");
  const std::string stepped = run_cli({"step", "--rule", "170", "--in", write("g.txt", "0010\n1110\n1011\n")}).out;
  EXPECT_EQ(unflatten(matvec(m, flatten(g)), 3, 4), parse_grid(stepped));
}

TEST_F(CliTest, Graph) {
  const Result r = run_cli({"graph", "--rule", "2", "--rows", "2", "--cols", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("v0 -> v1 [color=red];"), std::string::npos);
  const std::string dot = (dir_ / "g.dot").string();
  EXPECT_EQ(run_cli({"graph", "--rule", "2", "--rows", "2", "--cols", "3", "--dot", dot, "--uncolored"}).status, 0);
  EXPECT_NE(slurp(dot).find("v0 -> v1 [color=gray];"), std::string::npos);
}

TEST_F(CliTest, Analyze) {
  const Result r = run_cli({"analyze", "--rule", "4", "--rows", "3", "--cols", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("isolated: 3 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("weak components: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("rank: 6\ninvertible: no\n"), std::string::npos);
  const Result inv = run_cli({"analyze", "--rule", "170", "--rows", "3", "--cols", "4"});
  EXPECT_NE(inv.out.find("rank: 12\ninvertible: yes\n"), std::string::npos);
}

TEST_F(CliTest, VerifyAllSuites) {
  const Result r = run_cli({"verify", "--rows", "2", "--cols", "3", "--trials", "2", "--seed", "7"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("suite: equivalence\n"), std::string::npos);
  EXPECT_NE(r.out.find("suite: theorems\n"), std::string::npos);
  EXPECT_NE(r.out.find("suite: join\n"), std::string::npos);
  EXPECT_NE(r.out.find("suite: golden\n"), std::string::npos);
  EXPECT_NE(r.out.find("expected divergence: M290@2x2"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out, run_cli({"verify", "--rows", "2", "--cols", "3", "--trials", "2", "--seed", "7"}).out);
}

TEST_F(CliTest, OutputsEndWithSingleNewline) {
  const std::string in = write("g.txt", "01\n10\n");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"info", "5"},
           {"step", "--rule", "3", "--in", in},
           {"evolve", "--rule", "3", "--in", in, "--steps", "2", "--all"},
           {"matrix", "--rule", "3", "--rows", "2", "--cols", "2"},
           {"graph", "--rule", "3", "--rows", "2", "--cols", "2"},
           {"analyze", "--rule", "3", "--rows", "2", "--cols", "2"},
           {"verify", "--rows", "2", "--cols", "2", "--suite", "theorems"}}) {
    const std::string out = run_cli(args).out;
    ASSERT_GE(out.size(), 2U);
    EXPECT_EQ(out.back(), '\n');
    EXPECT_NE(out[out.size() - 2], '\n') << args[0];
  }
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"bogus"}).status, 2);
  EXPECT_EQ(run_cli({"info", "512"}).status, 2);
  EXPECT_EQ(run_cli({"step", "--rule", "1"}).status, 2);
  EXPECT_EQ(run_cli({"matrix", "--rule", "1", "--rows", "2", "--cols", "2", "--frobnicate"}).status, 2);
  EXPECT_EQ(run_cli({"matrix", "--rule", "1", "--rows", "2", "--cols", "2", "--format", "sparse"}).status, 2);
  EXPECT_EQ(run_cli({"verify", "--rows", "2", "--cols", "2", "--suite", "nope"}).status, 2);
  const Result missing = run_cli({"step", "--rule", "1", "--in", (dir_ / "absent.txt").string()});
  EXPECT_EQ(missing.status, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  const Result ragged = run_cli({"step", "--rule", "1", "--in", write("bad.txt", "01\n0\n")});
  EXPECT_EQ(ragged.status, 2);
  EXPECT_NE(ragged.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_cli({"matrix", "--rule", "1", "--rows", "200", "--cols", "200"}).status, 2);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).status, 0); }

}  // namespace
}  // namespace lca

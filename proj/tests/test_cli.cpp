#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "sweep.hpp"

namespace fs = std::filesystem;
using linerec::cli::run;

namespace {

struct Output {
  int code = 0;
  std::string out;
  std::string err;
};

Output invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t line_count(const fs::path& p) {
  const std::string s = slurp(p);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("linerec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateWritesThreeFiles) {
  const auto r = invoke({"generate", "--family", "complete", "--n", "4", "--bits", "36", "--seed", "7", "--out", path("k4")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_count(path("k4.lengths")), 6u);
  EXPECT_EQ(line_count(path("k4.config")), 4u);
  EXPECT_EQ(line_count(path("k4.graph")), 7u);
}

TEST_F(CliTest, GenerateIsDeterministic) {
  invoke({"generate", "--family", "near3regular", "--n", "8", "--bits", "40", "--seed", "3", "--noise", "random", "--out", path("a")});
  invoke({"generate", "--family", "near3regular", "--n", "8", "--bits", "40", "--seed", "3", "--noise", "random", "--out", path("b")});
  for (const char* ext : {".graph", ".config", ".lengths"}) EXPECT_EQ(slurp(path("a") + ext), slurp(path("b") + ext));
}

TEST_F(CliTest, GenerateRejectsImpossibleFamily) {
  const auto r = invoke({"generate", "--family", "complete", "--n", "2", "--bits", "8", "--out", path("x")});
  EXPECT_NE(r.code, 0);
  EXPECT_FALSE(r.err.empty());
  EXPECT_NE(invoke({"generate", "--family", "moebius", "--n", "5", "--bits", "8"}).code, 0);
  EXPECT_EQ(invoke({"generate", "--n", "5"}).code, 3);
}

TEST_F(CliTest, ReconstructNoiseless) {
  invoke({"generate", "--family", "complete", "--n", "4", "--bits", "36", "--seed", "7", "--out", path("k4")});
  const auto r = invoke({"reconstruct", path("k4.lengths"), "--out", path("rec")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ExactSuccess"), std::string::npos);
  EXPECT_NE(r.out.find("c: 3"), std::string::npos);
  EXPECT_NE(r.out.find("time_relations_ms"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("rec.graph")));
}

TEST_F(CliTest, ReconstructNoisyReportsResidual) {
  bool seen = false;
  for (int seed = 1; seed < 20 && !seen; ++seed) {
    invoke({"generate", "--family", "complete", "--n", "4", "--bits", "36", "--seed", std::to_string(seed), "--noise",
            "random", "--out", path("k4")});
    const auto r = invoke({"reconstruct", path("k4.lengths")});
    EXPECT_EQ(r.code, 0);
    if (r.out.find("CombinatorialSuccess") != std::string::npos) {
      EXPECT_NE(r.out.find("residual:"), std::string::npos);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST_F(CliTest, ReconstructLabeledAndPerCycle) {
  invoke({"generate", "--family", "cycle", "--n", "6", "--bits", "36", "--seed", "2", "--out", path("c6")});
  EXPECT_EQ(invoke({"reconstruct", path("c6.lengths"), "--graph", path("c6.graph")}).code, 0);
  EXPECT_EQ(invoke({"reconstruct", path("c6.lengths"), "--graph", path("c6.graph"), "--percycle"}).code, 0);
  EXPECT_EQ(invoke({"reconstruct", path("c6.lengths"), "--optimistic", "--n", "6"}).code, 0);
}

TEST_F(CliTest, ReconstructExitCodes) {
  std::ofstream(path("cut.lengths")) << "4\n11\n7";
  EXPECT_EQ(invoke({"reconstruct", path("cut.lengths")}).code, 3);
  EXPECT_EQ(invoke({"reconstruct", path("missing.lengths")}).code, 3);
  ASSERT_EQ(invoke({"generate", "--family", "complete", "--n", "4", "--bits", "2", "--seed", "1", "--out", path("low")}).code, 0);
  invoke({"generate", "--family", "cycle", "--n", "5", "--bits", "20", "--seed", "1", "--out", path("c5")});
  EXPECT_EQ(invoke({"reconstruct", path("low.lengths"), "--graph", path("c5.graph")}).code, 3);
  const auto r = invoke({"reconstruct", path("low.lengths"), "--graph", path("low.graph")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, KbasisK6AndC6) {
  invoke({"generate", "--family", "complete", "--n", "6", "--bits", "16", "--seed", "4", "--out", path("k6")});
  const auto ok = invoke({"kbasis", path("k6.lengths"), "--k", "3"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("bits: "), std::string::npos);
  invoke({"generate", "--family", "cycle", "--n", "6", "--bits", "16", "--seed", "4", "--out", path("c6")});
  const auto none = invoke({"kbasis", path("c6.lengths"), "--k", "3"});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.out.find("NoRelationsFound"), std::string::npos);
  EXPECT_EQ(invoke({"kbasis", path("c6.lengths"), "--k", "2"}).code, 3);
}

TEST_F(CliTest, KbasisK4AtTenBits) {
  invoke({"generate", "--family", "complete", "--n", "4", "--bits", "10", "--seed", "3", "--out", path("k4")});
  EXPECT_EQ(invoke({"kbasis", path("k4.lengths"), "--k", "3", "--graph", path("k4.graph")}).code, 0);
}

TEST_F(CliTest, SweepCsvIsReproducible) {
  const std::vector<std::string> args{"sweep", "--family", "cycle", "--n", "4..6", "--trials", "10", "--seed", "5",
                                      "--optimistic", "--no-wall-time"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "family,n,m,b_required,trials,successes,wall_ms");
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
  EXPECT_NE(a.err.find("monotonicity check"), std::string::npos);
}

TEST_F(CliTest, SweepWritesGnuplotScript) {
  const auto r = invoke({"sweep", "--family", "complete", "--n", "4,5", "--trials", "5", "--optimistic", "--out",
                         path("s.csv")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path("s.csv")));
  EXPECT_NE(slurp(path("s.csv.gp")).find("logscale"), std::string::npos);
}

TEST_F(CliTest, SweepRejectsBadConfig) {
  EXPECT_EQ(invoke({"sweep", "--family", "cycle", "--target-rate", "1.5"}).code, 3);
  EXPECT_EQ(invoke({"sweep", "--family", "cycle", "--trials", "0"}).code, 3);
  EXPECT_EQ(invoke({"sweep", "--family", "cycle", "--n", "7..4"}).code, 3);
  EXPECT_EQ(invoke({"sweep", "--family", "cycle", "--noise", "gauss"}).code, 3);
}

TEST(SweepRow, ExhaustedWindowMarker) {
  std::ostringstream os;
  linerec::cli::SweepRow row;
  row.family = linerec::GraphFamily::Cycle;
  row.n = 4;
  row.m = 4;
  row.trials = 10;
  row.successes = 3;
  row.wall_ms = 12.4;
  linerec::cli::write_csv_row(os, row, true);
  EXPECT_EQ(os.str(), "cycle,4,4,ExhaustedWindow,10,3,12\n");
}

TEST(ParseRange, Forms) {
  using linerec::cli::parse_range;
  EXPECT_EQ(parse_range("4..7"), (std::vector<std::size_t>{4, 5, 6, 7}));
  EXPECT_EQ(parse_range("4,6,9"), (std::vector<std::size_t>{4, 6, 9}));
  EXPECT_EQ(parse_range("5"), (std::vector<std::size_t>{5}));
  EXPECT_ANY_THROW(parse_range("a..b"));
}

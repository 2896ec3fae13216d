#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = csmd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("csmd-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }
  fs::path gen(const std::string& preset, int case_no, const std::string& model = "independent") {
    const fs::path p = dir_ / (preset + std::to_string(case_no) + model + ".txt");
    const Result r = cli({"gen", "--preset", preset, "--case", std::to_string(case_no), "--model",
                          model, "--out", p.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeHeartCaseOne) {
  const fs::path inst = gen("heart", 1);
  const Result r = cli({"analyze", "--instance", inst.string(), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["optimal_arm"], 1);
  const std::vector<double> total = j["total"];
  ASSERT_EQ(total.size(), 3u);
  EXPECT_NEAR(total[0], 0.29612, 1e-12);
  EXPECT_NEAR(total[1], 0.51962, 1e-12);
  EXPECT_NEAR(total[2], 0.74915, 1e-12);
  EXPECT_EQ(j["disagreement"].size(), 3u);

  const Result text = cli({"analyze", "--instance", inst.string()});
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("optimal arm: 1"), std::string::npos) << text.out;
}

TEST_F(CliTest, AnalyzeSingleArm) {
  const fs::path inst = write("k1.txt", "[instance]\nK = 1\ncosts = 3\nlambda = 0.1\n"
                                        "[env]\nvariant = independent\nrates = 0.2\n");
  const Result r = cli({"analyze", "--instance", inst.string(), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["optimal_arm"], 1);
  EXPECT_EQ(j["wd_margin"], "+inf");
  EXPECT_EQ(j["weak_dominance"], true);
}

TEST_F(CliTest, MalformedInstanceIsAUsageError) {
  const fs::path inst = write("bad.txt", "[instance]\nK = two\ncosts = 1\nlambda = 1\n"
                                         "[env]\nvariant = independent\nrates = 0.1\n");
  const Result r = cli({"analyze", "--instance", inst.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"analyze", "--instance", (dir_ / "missing.txt").string()}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"run", "--instance", inst.string(), "--algo", "nope"}).code, 2);
}

TEST_F(CliTest, RunIsDeterministic) {
  const fs::path inst = gen("pima", 2);
  const fs::path a = dir_ / "a.csv", b = dir_ / "b.csv";
  for (const fs::path& p : {a, b}) {
    const Result r = cli({"run", "--instance", inst.string(), "--algo", "ts", "--horizon", "2000",
                          "--reps", "8", "--seed", "7", "--out", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("final mean cumulative regret"), std::string::npos);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST_F(CliTest, CombinatorialAlgorithmOnCascadeInstanceIsAUsageError) {
  const fs::path inst = gen("heart", 3);
  const Result r = cli({"run", "--instance", inst.string(), "--algo", "cts", "--horizon", "10",
                        "--reps", "1", "--out", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(dir_ / "x.csv"));
}

TEST_F(CliTest, KlDefaultsToZeroExplorationParameter) {
  const fs::path inst = gen("heart", 3);
  const Result r = cli({"run", "--instance", inst.string(), "--algo", "kl", "--horizon", "10",
                        "--reps", "2", "--out", (dir_ / "kl.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("a=0"), std::string::npos) << r.out;
  const Result u = cli({"run", "--instance", inst.string(), "--algo", "ucb1", "--horizon", "10",
                        "--reps", "2", "--out", (dir_ / "u.csv").string()});
  EXPECT_NE(u.out.find("alpha=0.51"), std::string::npos) << u.out;
}

TEST_F(CliTest, GenWritesPublishedLambdaRows) {
  Result r = cli({"gen", "--preset", "pima", "--case", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lambda = 0.01, 0.004, 0.0038"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("weak-dominance status must be checked"), std::string::npos);
  r = cli({"gen", "--preset", "heart", "--case", "5"});
  EXPECT_NE(r.out.find("lambda = 0.0042, 0.0001, 0.00027"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"gen", "--preset", "heart", "--case", "6"}).code, 2);
  EXPECT_EQ(cli({"gen", "--preset", "iris", "--case", "1"}).code, 2);
}

TEST_F(CliTest, GeneratedFileRoundTrips) {
  const fs::path inst = gen("pima", 4, "nested");
  const Result r = cli({"gen", "--preset", "pima", "--case", "4", "--model", "nested"});
  EXPECT_EQ(slurp(inst), r.out);
}

TEST_F(CliTest, EndToEndSchemas) {
  const fs::path inst = gen("heart", 2, "nested");
  ASSERT_EQ(cli({"analyze", "--instance", inst.string()}).code, 0);
  const Result run = cli({"run", "--instance", inst.string(), "--algo", "ucb1", "--horizon", "50",
                          "--reps", "3", "--seed", "1", "--out", (dir_ / "o.csv").string()});
  ASSERT_EQ(run.code, 0) << run.err;
  std::istringstream csv(slurp(dir_ / "o.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "round,algo,mean_cum_regret,ci_low,ci_high");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    EXPECT_EQ(line.rfind(std::to_string(rows) + ",ucb1,", 0), 0u) << line;
  }
  EXPECT_EQ(rows, 50);

  const Result js = cli({"run", "--instance", inst.string(), "--algo", "ucb1", "--horizon", "50",
                         "--reps", "3", "--seed", "1", "--out", (dir_ / "o.json").string()});
  ASSERT_EQ(js.code, 0) << js.err;
  const json j = json::parse(slurp(dir_ / "o.json"));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 50u);
  for (const char* key : {"round", "algo", "mean_cum_regret", "ci_low", "ci_high"})
    EXPECT_TRUE(j[0].contains(key)) << key;
}

TEST_F(CliTest, DefaultOutputDirectoryFromEnvironment) {
  const fs::path inst = gen("heart", 4);
  ::setenv("CSMD_OUT_DIR", (dir_ / "out").string().c_str(), 1);
  const Result r = cli({"run", "--instance", inst.string(), "--algo", "ts", "--horizon", "5",
                        "--reps", "2"});
  ::unsetenv("CSMD_OUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "out" / "heart-case4-independent_ts.csv"));
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = CSMD_BINARY;
  EXPECT_EQ(std::system((bin + " --help > /dev/null").c_str()), 0);
  const int status = std::system((bin + " analyze --instance /nonexistent 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csmd/environment.hpp"
#include "csmd/error.hpp"
#include "csmd/instance_io.hpp"
#include "csmd/presets.hpp"

namespace csmd {
namespace {

namespace fs = std::filesystem;

Instance parse(const std::string& text, const fs::path& dir = {}) {
  std::istringstream in(text);
  return parse_instance(in, dir);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("csmd-io-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

constexpr const char* kHeartCase1 = R"(# Heart disease, case 1
[instance]
name = heart-case1
K = 3
mode = cascade
costs = 32, 397, 601
costs_are_cumulative = true
lambda = 0.0001, 0.0008, 0.001

[env]
variant = independent
p0 = 0.5
rates = 0.29292, 0.20202, 0.14815
)";

TEST(ParseInstance, HeartCaseOne) {
  const Instance inst = parse(kHeartCase1);
  EXPECT_EQ(inst.name, "heart-case1");
  EXPECT_EQ(inst.mode, Mode::cascade);
  EXPECT_EQ(inst.features, 3u);
  EXPECT_EQ(inst.feature_costs, (std::vector<double>{32, 365, 204}));
  const EffectiveCosts c = effective_costs(inst);
  EXPECT_EQ(c.raw, (std::vector<double>{32, 397, 601}));
  EXPECT_NEAR(c.effective[0], 0.0032, 1e-15);
  EXPECT_NEAR(c.effective[1], 0.3176, 1e-15);
  EXPECT_NEAR(c.effective[2], 0.601, 1e-15);
  const auto* env = std::get_if<IndependentError>(&inst.env);
  ASSERT_NE(env, nullptr);
  EXPECT_EQ(env->error_rates, (std::vector<double>{0.29292, 0.20202, 0.14815}));
}

TEST(ParseInstance, PmfRowsUseLabelFirstBitstrings) {
  const Instance inst = parse(R"([instance]
K = 2
costs = 1, 1
lambda = 0.1, 0.1
[env]
variant = pmf
000 0.5
111 0.25
110 0.25   # y=1, y1=1, y2=0
)");
  const auto& pmf = std::get<JointPmf>(inst.env);
  EXPECT_EQ(pmf.outputs, 2u);
  EXPECT_EQ(pmf.probability[0b000], 0.5);
  EXPECT_EQ(pmf.probability[0b111], 0.25);
  EXPECT_EQ(pmf.probability[0b011], 0.25);
  EXPECT_NEAR(exact_error_rates(inst.env).gamma[1], 0.25, 1e-15);
}

TEST(ParseInstance, PmfDeficitIsReported) {
  try {
    parse(R"([instance]
K = 1
costs = 1
lambda = 1
[env]
variant = pmf
00 0.5
11 0.499
)");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("0.001"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, MalformedInputCarriesLineNumbers) {
  try {
    parse("[instance]\nK = 2\ncosts = 1, x\nlambda = 1, 1\n[env]\nvariant = independent\nrates = 0, 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("[instance]\nK = 1\ncosts = 1\nlambda = 1, 2\n[env]\nvariant = independent\nrates = 0.1\n"),
               ConfigError);
  EXPECT_THROW(parse("[instance]\nK = 1\ncosts = -1\nlambda = 1\n[env]\nvariant = independent\nrates = 0.1\n"),
               ConfigError);
  EXPECT_THROW(parse("[bogus]\n"), ParseError);
}

TEST(ParseTrace, NonBinaryCellNamesItsColumn) {
  std::istringstream in("Y,Y1,Y2,Y3\n0,1,0,1\n0,1,2,0\n");
  try {
    parse_trace(in, "rounds.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseTrace, HeaderMustMatchWidth) {
  std::istringstream bad("Y,Y2\n0,1\n");
  EXPECT_THROW(parse_trace(bad), ParseError);
  std::istringstream ragged("Y,Y1\n0,1,1\n");
  EXPECT_THROW(parse_trace(ragged), ParseError);
}

TEST(LoadInstance, TraceIsReplayedThenExhausts) {
  TempDir dir;
  write_file(dir.path() / "rounds.csv", "Y,Y1,Y2\n0,0,1\n1,1,1\n");
  write_file(dir.path() / "inst.txt", R"([instance]
K = 2
costs = 1, 2
lambda = 0.01, 0.01
[env]
variant = trace
trace_path = rounds.csv
)");
  const Instance inst = load_instance(dir.path() / "inst.txt");
  const auto& trace = std::get<Trace>(inst.env);
  EXPECT_EQ(trace.rows(), 2u);
  EXPECT_FALSE(trace.resample);
  Sampler sampler(inst.env);
  Engine engine(1);
  sampler.next(engine);
  sampler.next(engine);
  EXPECT_THROW(sampler.next(engine), TraceExhausted);

}

TEST(LoadInstance, MissingFileIsAConfigError) {
  EXPECT_THROW(load_instance("/nonexistent/instance.txt"), ConfigError);
}

TEST(WriteInstance, PresetsRoundTrip) {
  for (Dataset d : {Dataset::heart, Dataset::pima}) {
    for (int c = 1; c <= 5; ++c) {
      for (SurrogateModel m : {SurrogateModel::independent, SurrogateModel::nested}) {
        const Instance inst = make_preset(d, c, m);
        std::ostringstream out;
        write_instance(out, inst, {true, preset_header(d, c, m), {}});
        std::istringstream in(out.str());
        const Instance back = parse_instance(in);
        EXPECT_EQ(back.name, inst.name);
        EXPECT_EQ(back.features, inst.features);
        EXPECT_EQ(back.lambda, inst.lambda);
        EXPECT_EQ(back.feature_costs, inst.feature_costs);
        EXPECT_EQ(exact_error_rates(back.env).gamma, exact_error_rates(inst.env).gamma);
        std::ostringstream again;
        write_instance(again, back, {true, preset_header(d, c, m), {}});
        EXPECT_EQ(again.str(), out.str());
      }
    }
  }
}

TEST(WriteTrace, RoundTrips) {
  Trace t;
  t.outputs = 3;
  t.cells = {0, 1, 0, 1, 1, 1, 1, 0};
  std::ostringstream out;
  write_trace(out, t);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_trace(in).cells, t.cells);
}

}  // namespace
}  // namespace csmd

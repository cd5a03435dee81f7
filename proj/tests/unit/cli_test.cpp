#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lst/bench/harness.hpp"
#include "lst/error.hpp"
#include "lst_cli/commands.hpp"
#include "lst_cli/csv.hpp"
#include "lst_cli/report.hpp"
#include "lst_cli/svg.hpp"
#include "reference.hpp"

namespace {

namespace fs = std::filesystem;
using lst::cli::Json;
using namespace lst::testing;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = lst::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(LST_TEST_SCRATCH) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  std::string example_csv() const {
    return file("example.csv", "x,y\n5,-.5\n5.5,-.5\n4,6\n3.5,4\n3,2.4\n2.5,2\n-2,.5\n");
  }

  fs::path dir_;
};

TEST_F(CliTest, FitOracleOnExampleData) {
  const CliRun r = run({"fit", example_csv(), "--method", "lst-oracle", "--alpha", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "lst-regress/1");
  EXPECT_EQ(j["method"], "lst-oracle");
  EXPECT_LE(j["q"].get<double>(), 4.86);
  EXPECT_EQ(j["beta"].size(), 2u);
}

TEST_F(CliTest, FitPerfectDataEveryMethod) {
  std::string csv = "x1,x2,y\n";
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int i = 0; i < 20; ++i) {
    const double a = g(rng);
    const double b = g(rng);
    csv += lst::cli::format_double(a) + "," + lst::cli::format_double(b) + "," +
           lst::cli::format_double(1.0 + 2.0 * a - 0.5 * b) + "\n";
  }
  const std::string in = file("perfect.csv", csv);
  for (const char* m : {"ls", "lst-aa1", "lst-aa2", "lts"}) {
    const CliRun r = run({"fit", in, "--method", m});
    ASSERT_EQ(r.code, 0) << m << r.err;
    EXPECT_LE(Json::parse(r.out)["q"].get<double>(), 1e-16) << m;
  }
}

TEST_F(CliTest, FitMalformedInputs) {
  // A row without its response value.
  CliRun r = run({"fit", file("short.csv", "x,y\n1,2\n3\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  // Named response column not present.
  r = run({"fit", file("noy.csv", "a,b\n1,2\n3,4\n5,7\n"), "--y-col", "y"});
  EXPECT_EQ(r.code, 2);
  r = run({"fit", file("text.csv", "x,y\n1,abc\n2,3\n")});
  EXPECT_EQ(r.code, 2);
  r = run({"fit", file("noheader.csv", "1,2\n3,4\n")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, FitRankDeficientAndConfigErrors) {
  CliRun r = run({"fit", file("flat.csv", "x,y\n1,1\n1,2\n1,3\n1,5\n"), "--method", "lst-aa1"});
  EXPECT_EQ(r.code, 3);
  r = run({"fit", example_csv(), "--method", "nope"});
  EXPECT_EQ(r.code, 4);
  r = run({"fit", example_csv(), "--alpha", "0.5"});
  EXPECT_EQ(r.code, 4);
  r = run({"fit", path("missing.csv")});
  EXPECT_EQ(r.code, 4);
  r = run({"fit", example_csv(), "--bogus"});
  EXPECT_EQ(r.code, 4);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 4);
}

TEST_F(CliTest, FitFormatsAndOutputFile) {
  const std::string in = example_csv();
  CliRun r = run({"fit", in, "--method", "ls", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("coefficient,value\n", 0), 0u) << r.out;
  r = run({"fit", in, "--method", "ls", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
  r = run({"fit", in, "--method", "lst-aa2", "--out", path("fit.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(path("fit.json")))["method"], "lst-aa2");
}

TEST_F(CliTest, JsonNumbersRoundTrip) {
  const CliRun r = run({"fit", example_csv(), "--method", "ls"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const lst::Dataset d = seven_points();
  const lst::Coefficients ls = ref_ls(d, {0, 1, 2, 3, 4, 5, 6});
  EXPECT_NEAR(j["beta"][0].get<double>(), ls(0), 1e-12);
  // Re-serializing the parsed value reproduces the text exactly.
  EXPECT_EQ(Json::parse(j.dump(2)).dump(2), j.dump(2));
}

TEST_F(CliTest, BenchTableAndJson) {
  const std::vector<std::string> args{"bench", "--reps", "1", "--n", "20", "--p", "2", "--seed", "4"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  // Timings differ between runs; the first two lines do not.
  EXPECT_EQ(a.out.substr(0, a.out.find('(')), b.out.substr(0, b.out.find('(')));
  EXPECT_NE(a.out.find("20"), std::string::npos);

  auto with_json = args;
  with_json.insert(with_json.end(), {"--json", path("bench.json"), "--methods", "lst-aa1,lts,ls"});
  const CliRun c = run(with_json);
  ASSERT_EQ(c.code, 0) << c.err;
  const Json j = Json::parse(slurp(path("bench.json")));
  EXPECT_EQ(j["schema"], "lst-regress/1");
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["scenario"]["n"], 20);
}

TEST_F(CliTest, BenchHelpMentionsReplication) {
  const CliRun r = run({"bench", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--n 100 --p 5"), std::string::npos) << r.out;
}

TEST_F(CliTest, BenchRejectsBadScenario) {
  EXPECT_EQ(run({"bench", "--eps", "0.6", "--reps", "1"}).code, 4);
  EXPECT_EQ(run({"bench", "--scenario", "nope", "--reps", "1"}).code, 4);
  EXPECT_EQ(run({"bench", "--methods", "ls,xyz", "--reps", "1"}).code, 4);
}

TEST_F(CliTest, BenchDeterministicAcrossThreadCounts) {
  const std::vector<std::string> args{"bench", "--reps", "5", "--n", "30", "--p", "3", "--seed", "9",
                                      "--format", "json", "--methods", "lst-aa1,lst-aa2,lts"};
  setenv("LST_THREADS", "1", 1);
  const CliRun one = run(args);
  setenv("LST_THREADS", "3", 1);
  const CliRun three = run(args);
  unsetenv("LST_THREADS");
  ASSERT_EQ(one.code, 0);
  ASSERT_EQ(three.code, 0);
  EXPECT_EQ(lst::cli::strip_timing(Json::parse(one.out)).dump(2),
            lst::cli::strip_timing(Json::parse(three.out)).dump(2));
}

TEST_F(CliTest, ThreadCountFromEnvironment) {
  setenv("LST_THREADS", "7", 1);
  EXPECT_EQ(lst::cli::thread_count(), 7u);
  setenv("LST_THREADS", "zero", 1);
  EXPECT_GE(lst::cli::thread_count(), 1u);
  unsetenv("LST_THREADS");
  EXPECT_GE(lst::cli::thread_count(), 1u);
}

std::vector<double> deviations(const std::string& csv) {
  std::istringstream in(csv);
  const lst::cli::CsvTable t = lst::cli::read_csv(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"magnitude", "deviation"}));
  std::vector<double> v;
  for (Eigen::Index i = 0; i < t.values.rows(); ++i) v.push_back(t.values(i, 1));
  return v;
}

TEST_F(CliTest, ProbeBreakdown) {
  CliRun r = run({"probe-breakdown", "--gen", "--m-contam", "0", "--method", "lst-aa1"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (double d : deviations(r.out)) EXPECT_EQ(d, 0.0);

  r = run({"probe-breakdown", "--gen", "--m-contam", "1", "--method", "ls"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = deviations(r.out);
  ASSERT_EQ(ls.size(), 5u);
  for (std::size_t k = 1; k < ls.size(); ++k) EXPECT_GT(ls[k], ls[k - 1]);
  EXPECT_GT(ls.back(), 1e3);

  r = run({"probe-breakdown", "--gen", "--m-contam", "5", "--method", "lst-aa1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto aa1 = deviations(r.out);
  const auto [lo, hi] = std::minmax_element(aa1.begin(), aa1.end());
  EXPECT_LE(*hi, 3.0 * *lo);

  EXPECT_EQ(run({"probe-breakdown", "--gen"}).code, 4);
  EXPECT_EQ(run({"probe-breakdown", "--m-contam", "1"}).code, 4);
}

TEST_F(CliTest, PlotExampleData) {
  const std::string in = example_csv();
  const CliRun r = run({"plot", in, "--methods", "ls,lts,lst-aa1", "--out", path("fig.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(path("fig.svg"));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  for (const char* tag : {"ls", "lts", "lst-aa1"}) {
    EXPECT_NE(svg.find(std::string(">") + tag + "<"), std::string::npos) << tag;
  }
  const CliRun again = run({"plot", in, "--methods", "ls,lts,lst-aa1"});
  EXPECT_EQ(again.out, svg);
}

TEST_F(CliTest, PlotEdgeCases) {
  const CliRun scatter = run({"plot", example_csv()});
  ASSERT_EQ(scatter.code, 0);
  EXPECT_EQ(scatter.out.find("<polyline"), std::string::npos);
  EXPECT_NE(scatter.out.find("<circle"), std::string::npos);

  EXPECT_EQ(run({"plot", file("three.csv", "a,b,y\n1,2,3\n4,5,6\n7,8,10\n")}).code, 5);
  EXPECT_EQ(run({"plot", file("bad.csv", "x,y\n1,2\nz,3\n")}).code, 2);
  EXPECT_EQ(run({"plot", example_csv(), "--fits", "0,1;0"}).code, 4);
}

TEST_F(CliTest, GenIsReproducible) {
  CliRun a = run({"gen", "--n", "25", "--p", "3", "--seed", "5", "--out", path("a.csv")});
  CliRun b = run({"gen", "--n", "25", "--p", "3", "--seed", "5", "--out", path("b.csv")});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.csv")).rfind("x1,x2,y\n", 0), 0u);

  const CliRun one = run({"gen", "--n", "6", "--p", "1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out.rfind("y\n", 0), 0u);
  EXPECT_EQ(run({"gen", "--n", "2", "--p", "5"}).code, 4);
}

TEST_F(CliTest, GenContaminationCount) {
  const CliRun r = run({"gen", "--n", "200", "--p", "3", "--eps", "0.1", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const lst::cli::CsvTable t = lst::cli::read_csv(in);
  int near_centre = 0;
  for (Eigen::Index i = 0; i < t.values.rows(); ++i) {
    Eigen::RowVectorXd centre(3);
    centre << 7, 7, -2;
    if ((t.values.row(i) - centre).norm() < 2.5) ++near_centre;
  }
  EXPECT_EQ(near_centre, 20);
}

TEST_F(CliTest, GenThenFitLosesNothing) {
  ASSERT_EQ(run({"gen", "--n", "40", "--p", "4", "--seed", "8", "--out", path("d.csv")}).code, 0);
  const lst::Dataset direct = [] {
    lst::Scenario s;
    s.n = 40;
    s.p = 4;
    s.master_seed = 8;
    return lst::generate_replication(s, 0);
  }();
  const lst::Dataset parsed = lst::cli::to_dataset(lst::cli::read_csv_file(path("d.csv")));
  EXPECT_EQ(parsed.design(), direct.design());
  EXPECT_EQ(parsed.response(), direct.response());
}

TEST(Csv, DialectDetails) {
  std::istringstream in(" a , y \r\n1, 2\r\n\n3 ,4\n");
  const lst::cli::CsvTable t = lst::cli::read_csv(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "y"}));
  EXPECT_EQ(t.values.rows(), 2);
  EXPECT_EQ(t.values(1, 0), 3.0);

  std::istringstream inf("x,y\n1,inf\n");
  EXPECT_THROW(lst::cli::read_csv(inf), lst::Error);
  std::istringstream empty("x,y\n");
  EXPECT_THROW(lst::cli::read_csv(empty), lst::Error);
}

TEST(Csv, ResponseColumnSelection) {
  std::istringstream in("y,x\n1,2\n3,5\n");
  const lst::cli::CsvTable t = lst::cli::read_csv(in);
  const lst::Dataset d = lst::cli::to_dataset(t, std::string("y"));
  EXPECT_EQ(d.response()(1), 3.0);
  EXPECT_EQ(d.carriers()(1, 0), 5.0);
}

TEST(Csv, DoublesRoundTrip) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0.0, 1e3);
  for (int t = 0; t < 1000; ++t) {
    const double v = g(rng) * std::pow(10.0, t % 20 - 10);
    EXPECT_EQ(std::stod(lst::cli::format_double(v)), v);
  }
}

TEST(ExitCodes, Mapping) {
  using lst::ErrorCode;
  EXPECT_EQ(lst::cli::exit_code_for(ErrorCode::kParse), 2);
  EXPECT_EQ(lst::cli::exit_code_for(ErrorCode::kRankDeficient), 3);
  EXPECT_EQ(lst::cli::exit_code_for(ErrorCode::kDegenerateDesign), 3);
  EXPECT_EQ(lst::cli::exit_code_for(ErrorCode::kInvalidArgument), 4);
  EXPECT_EQ(lst::cli::exit_code_for(ErrorCode::kUnsupportedDimension), 4);
}

TEST(Svg, DeterministicAndRejectsWrongDimension) {
  const lst::Dataset d = seven_points();
  lst::Coefficients b(2);
  b << 0, 1;
  const std::vector<lst::cli::PlotLine> lines{{"a", b}};
  EXPECT_EQ(lst::cli::render_svg(d, lines), lst::cli::render_svg(d, lines));
  std::mt19937_64 rng(1);
  EXPECT_THROW(lst::cli::render_svg(random_dataset(rng, 5, 3), lines), lst::Error);
}

}  // namespace

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cube/cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation cube(std::vector<const char*> args) {
  args.insert(args.begin(), "cube");
  std::ostringstream out, err;
  const int code = cube::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> f;
  std::istringstream is(line);
  std::string item;
  while (std::getline(is, item, ',')) f.push_back(item);
  return f;
}

TEST(CliEval, Identity) {
  const Invocation r = cube({"eval", "--m", "1", "--stretches", "1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "M,l1,l2,l3,T1,T2,T3,det_DT,m1,m2,m3,energy,monotonicity,stable");
  const auto f = split(lines[1]);
  EXPECT_EQ(f[4], "0");
  EXPECT_EQ(f[5], "0");
  EXPECT_EQ(f[6], "0");
  EXPECT_NEAR(std::stod(f[7]), 12.0, 1e-12);
  EXPECT_EQ(f[12], "strongly_monotone");
}

TEST(CliEval, LameParameters) {
  const Invocation r = cube({"--mu", "2", "--lambda", "2", "eval", "--stretches", "1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(split(data_lines(r.out)[1])[0]), 5.0 / 3.0, 1e-15);
}

TEST(CliEval, LameStressesScaledByMu) {
  const Invocation a = cube({"eval", "--m", "2", "--stretches", "2,1,1"});
  const Invocation b = cube({"eval", "--mu", "3", "--lambda", "4", "--stretches", "2,1,1"});
  const auto fa = split(data_lines(a.out)[1]), fb = split(data_lines(b.out)[1]);
  EXPECT_NEAR(std::stod(fb[4]), 3 * std::stod(fa[4]), 1e-13);
  EXPECT_EQ(fb[7], fa[7]);
}

TEST(CliEval, DomainErrorExitsTwo) {
  const Invocation r = cube({"eval", "--m", "0.5", "--stretches", "1,1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("M > 2/3"), std::string::npos);
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(cube({"eval", "--m", "1", "--stretches", "1,1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--m", "1", "--stretches", "1,x,1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--m", "1", "--stretches", "1,-1,1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--stretches", "1,1,1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--m", "1", "--mu", "1", "--stretches", "1,1,1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--mu", "1", "--stretches", "1,1,1"}).code, 2);
  EXPECT_EQ(cube({"--m", "1"}).code, 2);
  EXPECT_EQ(cube({"eval", "--m", "1", "--format", "xml", "--stretches", "1,1,1"}).code, 2);
}

TEST(CliBifurcate, Values) {
  const Invocation r = cube({"bifurcate", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = split(data_lines(r.out)[1]);
  EXPECT_NEAR(std::stod(f[0]), 1.70310, 1e-5);
  EXPECT_NEAR(std::stod(f[1]), 3.406, 1e-3);
  EXPECT_NEAR(std::stod(f[3]), 3.09675, 1e-3);
  const auto g = split(data_lines(cube({"bifurcate", "--m", "2"}).out)[1]);
  EXPECT_LT(std::stod(g[3]), std::stod(g[1]));
}

TEST(CliTrace, RowsAndColumns) {
  const auto path = std::filesystem::temp_directory_path() / "cube_cli_test_trace.csv";
  const std::string p = path.string();
  const Invocation r = cube({"trace", "--m", "1", "--alpha-min", "0", "--alpha-max", "5", "--step", "0.1",
                      "--out", p.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto lines = data_lines(ss.str());
  EXPECT_EQ(lines[0], "alpha,branch,l1,l2,l3,residual,monotonicity,stable,total_energy");
  int radial = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i]);
    ASSERT_EQ(f.size(), 9u);
    if (f[1] == "radial") ++radial;
    else EXPECT_GE(std::stod(f[0]), 3.1 - 1e-12);
    EXPECT_LE(std::stod(f[5]), 1e-9);
  }
  EXPECT_EQ(radial, 51);
  std::filesystem::remove(path);
}

TEST(CliTrace, CompressionRadialOnly) {
  const Invocation r = cube({"trace", "--m", "1", "--alpha-min", "-2", "--alpha-max", "0", "--step", "0.5"});
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines.size(), 6u);
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(split(lines[i])[1], "radial");
}

TEST(CliTrace, BitStable) {
  const Invocation a = cube({"trace", "--m", "1.3", "--alpha-min", "2", "--alpha-max", "4", "--step", "0.25"});
  const Invocation b = cube({"trace", "--m", "1.3", "--alpha-min", "2", "--alpha-max", "4", "--step", "0.25"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTrace, BadStep) {
  EXPECT_EQ(cube({"trace", "--m", "1", "--step", "0"}).code, 2);
  EXPECT_EQ(cube({"trace", "--m", "1", "--alpha-min", "3", "--alpha-max", "1"}).code, 2);
}

TEST(CliRegions, HeaderAndCrossing) {
  const Invocation r = cube({"regions", "--m", "1", "--slice", "two-equal", "--box", "0.5,3", "--res", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# M=1 slice=two-equal box=0.5,3 res=100 tol=1e-09"), std::string::npos);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 100u * 100u + 1);
  EXPECT_EQ(lines[0], "l1,l2,l3,det_DT,m1,m2,m3,monotonicity,stable");
  double crossing = 0.0;
  for (int k = 0; k + 1 < 100; ++k) {
    const auto a = split(lines[1 + k * 100 + k]), b = split(lines[1 + (k + 1) * 100 + k + 1]);
    if (a[7] == "strongly_monotone" && b[7] != "strongly_monotone") crossing = std::stod(a[0]);
  }
  EXPECT_NEAR(crossing, 1.7031065365713212, 2.5 / 99);
}

TEST(CliRegions, FullBoxStableImpliesMonotone) {
  const Invocation r = cube({"regions", "--m", "1", "--box3", "0.5,2", "--res", "20"});
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 8001u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i]);
    if (f[8] == "1") EXPECT_NE(f[7], "not_monotone");
  }
}

TEST(CliRegions, MalformedBox) {
  EXPECT_EQ(cube({"regions", "--m", "1", "--box", "3,1"}).code, 2);
  EXPECT_EQ(cube({"regions", "--m", "1", "--box", "1"}).code, 2);
  EXPECT_EQ(cube({"regions", "--m", "1", "--box", "a,b"}).code, 2);
  EXPECT_EQ(cube({"regions", "--m", "1"}).code, 2);
  EXPECT_EQ(cube({"regions", "--m", "1", "--box", "1,2", "--res", "1"}).code, 2);
  EXPECT_EQ(cube({"regions", "--m", "1", "--slice", "diag", "--box", "1,2"}).code, 2);
}

TEST(CliVerify, PassesAndIsDeterministic) {
  const Invocation a = cube({"verify", "--m", "1", "--seed", "42"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
  const Invocation b = cube({"verify", "--m", "1", "--seed", "7", "--quick"});
  const Invocation c = cube({"verify", "--m", "1", "--seed", "7", "--quick"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, c.out);
}

TEST(CliVerify, DomainError) { EXPECT_EQ(cube({"verify", "--m", "0.6"}).code, 2); }

TEST(CliJson, EnvelopeKeys) {
  const Invocation r = cube({"bifurcate", "--m", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"meta\""), std::string::npos);
  EXPECT_NE(r.out.find("\"data\""), std::string::npos);
  EXPECT_NE(r.out.find("\"version\""), std::string::npos);
}

}  // namespace

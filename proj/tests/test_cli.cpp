#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "auxr/cli.hpp"

using namespace auxr;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("auxr_cli_" + name)).string();
}

}  // namespace

TEST(Cli, EvaluateR) {
  const Outcome o = run_cli({"r", "--s", "0.5+10i", "--method", "hermite"});
  EXPECT_EQ(o.code, 0) << o.err;
  ASSERT_FALSE(o.out.empty());
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1);
  const Complex printed = cli::parse_complex(o.out.substr(0, o.out.size() - 1));
  EXPECT_LE(rel_diff(printed, r_hermite({0.5, 10.0}).value), 1e-14);
}

TEST(Cli, ValidateLemma) {
  const Outcome o = run_cli({"validate", "lemma", "--z", "0.75"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("residual"), std::string::npos);
  EXPECT_EQ(run_cli({"validate", "lemma", "--z", "1.2"}).code, 2);
}

TEST(Cli, ValidateOthers) {
  EXPECT_EQ(run_cli({"validate", "prop", "--s", "-0.5-10i", "--z", "2"}).code, 0);
  EXPECT_EQ(run_cli({"validate", "hermite", "--nu", "-0.5", "--z", "1"}).code, 0);
  EXPECT_EQ(run_cli({"validate", "ode", "--nu", "-0.5", "--z", "1"}).code, 0);
  EXPECT_EQ(run_cli({"validate", "hermite", "--nu", "-3", "--z", "1"}).code, 2);
}

TEST(Cli, ValidationFailureExitsOne) {
  // Finite differences cannot get anywhere near this.
  EXPECT_EQ(run_cli({"validate", "ode", "--nu", "-0.5", "--z", "1", "--tol", "1e-30"}).code, 1);
}

TEST(Cli, Xray) {
  const std::string path = temp_path("fig.ppm");
  fs::remove(path);
  const Outcome o = run_cli({"xray", "--t", "10", "--square", "6", "--res", "32", "--out", path});
  EXPECT_EQ(o.code, 0) << o.err;
  ASSERT_TRUE(fs::exists(path));
  EXPECT_EQ(fs::file_size(path), std::string("P6\n32 32\n255\n").size() + 3u * 32u * 32u);
  fs::remove(path);
}

TEST(Cli, XrayCsv) {
  const std::string path = temp_path("csvfig.ppm");
  const Outcome o = run_cli({"xray", "--t", "20", "--res", "8", "--out", path, "--csv"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(fs::exists(temp_path("csvfig.csv")));
  fs::remove(path);
  fs::remove(temp_path("csvfig.csv"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"r"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"r", "--s", "1+"}).code, 2);
  EXPECT_EQ(run_cli({"r", "--s", "1", "--json", "--csv"}).code, 2);
  EXPECT_EQ(run_cli({"r", "--s", "1", "--method", "mordell"}).code, 2);
  EXPECT_EQ(run_cli({"crosscheck", "--s", "1", "--grid", "0;1"}).code, 2);
  EXPECT_EQ(run_cli({"zeta", "--s", "3"}).code, 2);
  const Outcome missing = run_cli({"r"});
  EXPECT_FALSE(missing.err.empty());
}

TEST(Cli, UnknownFlagHasNoSideEffects) {
  const std::string path = temp_path("never.ppm");
  fs::remove(path);
  const Outcome o = run_cli({"xray", "--t", "10", "--res", "8", "--out", path, "--bogus"});
  EXPECT_EQ(o.code, 2);
  EXPECT_FALSE(fs::exists(path));
  EXPECT_TRUE(o.out.empty());
}

TEST(Cli, JsonRoundTrip) {
  const Outcome text = run_cli({"r", "--s", "0.5+10i", "--method", "definition"});
  const Outcome json = run_cli({"r", "--s", "0.5+10i", "--method", "definition", "--json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  const Complex from_json{j["value"]["re"].get<double>(), j["value"]["im"].get<double>()};
  const Complex from_text = cli::parse_complex(text.out.substr(0, text.out.size() - 1));
  EXPECT_LE(rel_diff(from_json, from_text), 1e-15);
  EXPECT_EQ(j["method"], "definition");
}

TEST(Cli, CrosscheckJson) {
  const Outcome o =
      run_cli({"crosscheck", "--s", "-1", "--method", "definition", "--method", "hermite", "--json"});
  EXPECT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["values"].size(), 2u);
  EXPECT_LE(j["max_pairwise_rel_err"].get<double>(), 1e-6);
}

TEST(Cli, ZetaNote) {
  const Outcome o = run_cli({"zeta", "--s", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.err.find("note"), std::string::npos);
  EXPECT_LE(std::abs(cli::parse_complex(o.out.substr(0, o.out.size() - 1)) - kPi * kPi / 6.0), 1e-9);
}

TEST(Cli, NodeCapFromEnvironment) {
  ::setenv("AUXR_MAX_NODES", "16", 1);
  const Outcome o = run_cli({"r", "--s", "0.5", "--method", "definition"});
  ::unsetenv("AUXR_MAX_NODES");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("exceed"), std::string::npos);
}

TEST(CliParse, ComplexLiterals) {
  EXPECT_EQ(cli::parse_complex("0.5+10i"), Complex(0.5, 10.0));
  EXPECT_EQ(cli::parse_complex("0.5-10i"), Complex(0.5, -10.0));
  EXPECT_EQ(cli::parse_complex("-2"), Complex(-2.0, 0.0));
  EXPECT_EQ(cli::parse_complex("3i"), Complex(0.0, 3.0));
  EXPECT_EQ(cli::parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(cli::parse_complex("1e-3+2.5e1i"), Complex(1e-3, 25.0));
  EXPECT_THROW(cli::parse_complex("0.5 + 10i"), cli::UsageError);
  EXPECT_THROW(cli::parse_complex("abc"), cli::UsageError);
}

TEST(CliParse, Grid) {
  const auto pts = cli::parse_grid("-1,0.5;0,20");
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts.front(), Complex(-1.0, 0.0));
  EXPECT_EQ(pts.back(), Complex(0.5, 20.0));
  EXPECT_THROW(cli::parse_grid("1,2"), cli::UsageError);
}

TEST(CliParse, Formatting) {
  EXPECT_EQ(cli::fmt(Complex(0.5, -2.0)), "0.5-2i");
  EXPECT_EQ(cli::fmt(1.0 / 3.0), "0.333333333333333");
}

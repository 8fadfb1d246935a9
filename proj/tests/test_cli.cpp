#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace cli = hermite_zeros::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t data_rows(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  std::size_t rows = 0;
  std::getline(is, line);  // header
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++rows;
  return rows;
}

}  // namespace

TEST(Cli, Solve) {
  const auto r = run({"solve", "--m", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "M,theta,residual,iterations\n0,0,0,0\n");
  const auto half = run({"solve", "--m", "1.5707963267948966"});
  EXPECT_EQ(half.code, 0);
  EXPECT_NE(half.out.find(",0.83171119357973"), std::string::npos);
}

TEST(Cli, ZerosExact) {
  const auto r = run({"zeros", "--n", "2", "--method", "exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,j,x\n", 0), 0u);
  EXPECT_NE(r.out.find("2,-1,-0.70710678"), std::string::npos);
  EXPECT_NE(r.out.find("2,1,0.70710678"), std::string::npos);
}

TEST(Cli, ZerosAsymptoticColumns) {
  const auto r = run({"zeros", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,j,M,theta,x\n", 0), 0u);
  EXPECT_EQ(data_rows(r.out), 3u);
  EXPECT_NE(r.out.find("\n3,0,0,0,0\n"), std::string::npos);
  EXPECT_EQ(run({"zeros", "--n", "0"}).out, "n,j,M,theta,x\n");
}

TEST(Cli, ZerosJson) {
  const auto r = run({"zeros", "--n", "4", "--method", "exact", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["j"], -2);
  EXPECT_EQ(j[3]["j"], 2);
  EXPECT_NEAR(j[3]["x"].get<double>(), 1.6506801238857846, 1e-14);
  const auto a = nlohmann::json::parse(run({"zeros", "--n", "5", "--format", "json"}).out);
  EXPECT_TRUE(a[2].contains("theta"));
  EXPECT_EQ(a[2]["j"], 0);
}

TEST(Cli, CompareToStdoutAndFile) {
  const auto r = run({"compare", "--n-min", "1", "--n-max", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(data_rows(r.out), 650u);

  const auto path = std::filesystem::temp_directory_path() / "hzeros_cli_test.csv";
  std::filesystem::remove(path);
  const auto f = run({"compare", "--n-min", "1", "--n-max", "50", "--out", path.string()});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST(Cli, CompareOptions) {
  const auto even = run({"compare", "--n-min", "1", "--n-max", "50", "--parity", "even"});
  EXPECT_EQ(data_rows(even.out), 325u);
  const auto summary = run({"compare", "--n-min", "2", "--n-max", "4", "--summary"});
  EXPECT_NE(summary.out.find("\n# n,min_abs_err,max_abs_err,mean_abs_err\n"), std::string::npos);
  const auto json = run({"compare", "--n-min", "3", "--n-max", "3", "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(json.out)[0]["rel_err"].is_null());
}

TEST(Cli, FailedWriteLeavesNoFile) {
  const auto path = std::filesystem::temp_directory_path() / "no_such_dir_hz" / "out.csv";
  const auto r = run({"compare", "--n-min", "1", "--n-max", "3", "--out", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Cli, Quad) {
  const auto r = run({"quad", "--n", "5", "--nodes", "exact", "--integrand", "monomial", "--param", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(data_rows(r.out), 5u);
  EXPECT_NE(r.out.find("# reference=1.329340388179137"), std::string::npos);
  const auto c = run({"quad", "--n", "20", "--nodes", "asymptotic", "--integrand", "cos", "--param", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("# nodes=asymptotic"), std::string::npos);
  EXPECT_NE(c.out.find("# rel_err="), std::string::npos);
}

TEST(Cli, Spin) {
  const auto r = run({"spin", "--s", "3/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# radius=2.6457513110645907\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n1,0\n"), std::string::npos);
  EXPECT_EQ(run({"spin", "--s", "1.5"}).out, r.out);
  EXPECT_EQ(cli::parse_twice_spin("2"), 4);
  EXPECT_EQ(cli::parse_twice_spin("1/2"), 1);
  EXPECT_FALSE(cli::parse_twice_spin("1/3"));
  EXPECT_FALSE(cli::parse_twice_spin("0"));
  EXPECT_FALSE(cli::parse_twice_spin("abc"));
  EXPECT_FALSE(cli::parse_twice_spin("1.5x"));
}

TEST(Cli, ArgumentErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"solve"},
      {"solve", "--m", "4"},
      {"solve", "--m", "-0.1"},
      {"solve", "--m", "1", "--extra"},
      {"zeros", "--n", "-1"},
      {"zeros", "--n", "3", "--method", "chebyshev"},
      {"zeros", "--n", "3", "--format", "xml"},
      {"compare", "--n-min", "0", "--n-max", "3"},
      {"compare", "--n-min", "5", "--n-max", "3"},
      {"compare", "--n-min", "1", "--n-max", "3", "--parity", "prime"},
      {"compare", "--n-min", "1", "--n-max", "3", "--format", "json", "--summary"},
      {"quad", "--n", "0"},
      {"quad", "--n", "3", "--integrand", "monomial", "--param", "2.5"},
      {"quad", "--n", "3", "--integrand", "sin"},
      {"spin", "--s", "0.3"},
      {"spin", "--s", "-1"},
  };
  for (const auto& args : bad) {
    const auto r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + ' ';
    EXPECT_EQ(r.code, 2) << joined;
    EXPECT_TRUE(r.out.empty()) << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(Cli, HelpOnEverySubcommand) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> subs = {
      {"solve", {"--m"}},
      {"zeros", {"--n", "--method", "--format"}},
      {"compare", {"--n-min", "--n-max", "--parity", "--out", "--format", "--summary"}},
      {"quad", {"--n", "--nodes", "--integrand", "--param"}},
      {"spin", {"--s"}},
  };
  for (const auto& [name, flags] : subs) {
    const auto r = run({name, "--help"});
    EXPECT_EQ(r.code, 0) << name;
    for (const auto& flag : flags) EXPECT_NE(r.out.find(flag), std::string::npos) << name << ' ' << flag;
  }
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"compare", "--n-min", "1", "--n-max", "30", "--summary"};
  EXPECT_EQ(run(args).out, run(args).out);
}

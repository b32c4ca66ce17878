#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct GoldenCase {
  const char* file;
  const char* argv;
};

const std::vector<GoldenCase> kGolden = {
    {"factor_15_2.json", "factor --n 15 --a 2 --seed 7"},
    {"factor_21_10.json", "factor --n 21 --a 10"},
    {"factor_91_random.json", "factor --n 91 --seed 3 --register paper"},
    {"factor_35_table.txt", "factor --n 35 --seed 11 --format table"},
    {"order_15_2.txt", "order --n 15 --a 2"},
    {"order_21_10.json", "order --n 21 --a 10 --format json"},
    {"crt_6.txt", "crt --n 6"},
    {"crt_15.txt", "crt --n 15"},
    {"crt_21.txt", "crt --n 21"},
    {"crt_12.csv", "crt --n 12 --format csv"},
    {"crt_30.json", "crt --n 30 --format json"},
    {"cosets_15_2.txt", "cosets --n 15 --a 2"},
    {"cosets_3_2.json", "cosets --n 3 --a 2 --format json"},
    {"project_6_1.csv", "project --n 6 --j 1 --seed 5"},
    {"project_15_4.txt", "project --n 15 --j 4 --seed 2 --format table"},
    {"salc_6.csv", "salc --n 6"},
    {"salc_15_7.txt", "salc --n 15 --j 7 --format table"},
    {"ring_6.csv", "ring --n 6"},
    {"ring_15.txt", "ring --n 15 --format table"},
    {"oracle_15_2.txt", "oracle --n 15 --a 2 --len 9"},
    {"oracle_21_10.txt", "oracle --n 21 --a 10 --len 14"},
    {"oracle_21_10_overflow.csv", "oracle --n 21 --a 10 --len 42 --format csv"},
    {"oracle_6_5.json", "oracle --n 6 --a 5 --len 4 --format json"},
    {"spectrum_15_2.csv", "spectrum --n 15 --a 2 --len 60"},
    {"spectrum_21_10.txt", "spectrum --n 21 --a 10 --len 60 --w 13 --format table"},
    {"simulate_15_2.csv", "simulate --n 15 --a 2 --m 64 --seed 1"},
    {"simulate_21_10.txt", "simulate --n 21 --a 10 --m 4096 --seed 9 --format table"},
    {"simulate_15_2_paper.json", "simulate --n 15 --a 2 --register paper --format json"},
    {"got_check_30.txt", "got-check --n 30"},
    {"got_check_7.json", "got-check --n 7 --format json"},
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliGolden, EverySubcommandMatchesItsGoldenFile) {
  const bool update = std::getenv("HSG_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : kGolden) {
    const auto r = run(split(c.argv));
    ASSERT_EQ(r.code, 0) << c.argv << "\n" << r.err;
    EXPECT_TRUE(r.err.empty()) << c.argv;
    const fs::path path = fs::path(HSG_GOLDEN_DIR) / c.file;
    if (update) {
      std::ofstream(path, std::ios::binary) << r.out;
      continue;
    }
    ASSERT_TRUE(fs::exists(path)) << path;
    EXPECT_EQ(r.out, read_file(path)) << c.argv;
  }
}

TEST(CliGolden, RepeatedRunsAreByteIdentical) {
  for (const auto& c : kGolden) {
    EXPECT_EQ(run(split(c.argv)).out, run(split(c.argv)).out) << c.argv;
  }
}

TEST(Cli, PublishedRowsAppear) {
  const auto crt = run(split("crt --n 15"));
  EXPECT_NE(crt.out.find("C_15^5 C_15^3 = C_15^8"), std::string::npos);
  const auto oracle = run(split("oracle --n 21 --a 10 --len 14"));
  EXPECT_NE(oracle.out.find("13  (3,1)  476190476190  10"), std::string::npos);
  const auto factor = run(split("factor --n 15 --a 2 --seed 7"));
  EXPECT_NE(factor.out.find("\"factors\": [\n    3,\n    5\n  ]"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const char* argv : {"", "bogus", "factor --n 15 --bogus 1", "factor --n 15 --format csv",
                           "order --n 15", "order --n x --a 2", "crt --n 15 --format xml",
                           "factor --n 15 --register big", "project --n 6", "project --n 6 --j 6",
                           "order --n 15 --a 2 extra", "spectrum --n 15 --a 2 --len 0",
                           "factor --n 15 --max-attempts 0"}) {
    const auto r = run(split(argv));
    EXPECT_EQ(r.code, hsg::cli::kExitUsage) << "'" << argv << "'";
    EXPECT_TRUE(r.out.empty()) << argv;
    EXPECT_FALSE(r.err.empty()) << argv;
  }
}

TEST(Cli, DomainErrorsExitOneWithoutPartialOutput) {
  for (const char* argv : {"factor --n 13", "factor --n 3", "order --n 15 --a 3", "cosets --n 15 --a 3",
                           "oracle --n 15 --a 5", "simulate --n 15 --a 5", "factor --n 15 --a 30",
                           "simulate --n 15 --a 2 --m 1"}) {
    const auto r = run(split(argv));
    EXPECT_EQ(r.code, hsg::cli::kExitDomainError) << argv;
    EXPECT_TRUE(r.out.empty()) << argv;
    EXPECT_NE(r.err.find("error:"), std::string::npos) << argv;
  }
}

TEST(Cli, HelpExitsZero) {
  const auto top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  EXPECT_NE(top.out.find("factor"), std::string::npos);
  const auto sub = run({"factor", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--max-attempts"), std::string::npos);
}

TEST(Cli, OutWritesFileInsteadOfStdout) {
  const fs::path path = fs::temp_directory_path() / "hsg_cli_out_test.csv";
  fs::remove(path);
  const auto r = run({"ring", "--n", "6", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), run({"ring", "--n", "6"}).out);
  fs::remove(path);
}

TEST(Cli, SeedDefaultsToZeroAndChangesRandomInput) {
  const auto a = run(split("project --n 6 --j 1 --seed 1"));
  const auto b = run(split("project --n 6 --j 1 --seed 2"));
  EXPECT_NE(a.out, b.out);
  EXPECT_NE(run(split("factor --n 15 --a 2")).out.find("\"seed\": 0"), std::string::npos);
}

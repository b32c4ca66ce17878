#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "hsg/arithmetic.hpp"
#include "hsg/errors.hpp"
#include "hsg/hidden_subgroup.hpp"
#include "oracles.hpp"

using hsg::ExactInt;
using hsg::OracleSpec;

namespace {

struct Row {
  std::uint64_t x;
  const char* alpha;
  std::uint64_t beta;
};

// Published (alpha, beta) rows; x = 8 for N = 15 is corrected to 17.
const std::vector<Row> kRows15 = {{0, "0", 1}, {1, "0", 2}, {2, "0", 4}, {3, "0", 8}, {4, "1", 1},
                                  {5, "2", 2}, {6, "4", 4}, {7, "8", 8}, {8, "17", 1}};
const std::vector<Row> kRows21 = {
    {0, "0", 1},           {1, "0", 10},           {2, "4", 16},
    {3, "47", 13},         {4, "476", 4},          {5, "4761", 19},
    {6, "47619", 1},       {7, "476190", 10},      {8, "4761904", 16},
    {9, "47619047", 13},   {10, "476190476", 4},   {11, "4761904761", 19},
    {12, "47619047619", 1}, {13, "476190476190", 10}};

}  // namespace

TEST(OracleEval, PublishedTables) {
  const OracleSpec s15(15, 2);
  for (const auto& row : kRows15) {
    const auto label = hsg::oracle_eval(s15, row.x);
    EXPECT_EQ(label.alpha.to_string(), row.alpha) << "x=" << row.x;
    EXPECT_EQ(label.beta, ExactInt{row.beta}) << "x=" << row.x;
  }
  const OracleSpec s21(21, 10);
  for (const auto& row : kRows21) {
    const auto label = hsg::oracle_eval(s21, row.x);
    EXPECT_EQ(label.alpha.to_string(), row.alpha) << "x=" << row.x;
    EXPECT_EQ(label.beta, ExactInt{row.beta}) << "x=" << row.x;
  }
}

TEST(OracleEval, CorrectedRowAgreesWithDecimalOracle) {
  const auto [q, r] = oracle::dec_divmod(oracle::dec_pow(2, 8), 15);
  EXPECT_EQ(q, "17");
  EXPECT_EQ(r, 1u);
  EXPECT_EQ(hsg::oracle_eval(OracleSpec(15, 2), 8).alpha, ExactInt{17});
}

TEST(OracleEval, AgreesWithDecimalOracleUntilOverflow) {
  for (auto [n, a] : std::vector<std::pair<unsigned, unsigned>>{{15, 2}, {21, 10}, {35, 3}, {6, 5}, {91, 17}}) {
    const OracleSpec spec(n, a);
    bool overflowed = false;
    for (unsigned x = 0; x < 200; ++x) {
      const std::string power = oracle::dec_pow(a, x);
      // 2^127 - 1 has 39 digits.
      const bool fits = power.size() < 39 || (power.size() == 39 && power <= "170141183460469231731687303715884105727");
      if (!fits) {
        EXPECT_THROW(hsg::oracle_eval(spec, x), hsg::OverflowError) << a << "^" << x;
        overflowed = true;
        continue;
      }
      const auto label = hsg::oracle_eval(spec, x);
      const auto [q, r] = oracle::dec_divmod(power, n);
      ASSERT_EQ(label.alpha.to_string(), q);
      ASSERT_EQ(label.beta.to_u64(), r);
      ASSERT_EQ(label.alpha * ExactInt{n} + label.beta, ExactInt::parse(power));
      ASSERT_EQ(label.beta, hsg::mod_pow(a, x, n));
    }
    EXPECT_TRUE(overflowed);
  }
}

TEST(OracleEval, OverflowContract) {
  const OracleSpec spec(21, 10);
  EXPECT_THROW(hsg::oracle_eval(spec, 40), hsg::OverflowError);
  EXPECT_EQ(hsg::mod_pow(10, 40, 21).to_u64(), oracle::naive_pow_mod(10, 40, 21));
  EXPECT_NO_THROW(hsg::oracle_eval(spec, 38));
}

TEST(ResidueSequence, Examples) {
  const auto s15 = hsg::residue_sequence(OracleSpec(15, 2), 8);
  EXPECT_EQ(s15, (std::vector<ExactInt>{1, 2, 4, 8, 1, 2, 4, 8}));
  const auto s21 = hsg::residue_sequence(OracleSpec(21, 10), 12);
  EXPECT_EQ(s21, (std::vector<ExactInt>{1, 10, 16, 13, 4, 19, 1, 10, 16, 13, 4, 19}));
  const auto ones = hsg::residue_sequence(OracleSpec(15, 16), 10);
  for (const auto& v : ones) EXPECT_EQ(v, ExactInt{1});
}

TEST(ResidueSequence, PeriodEqualsOrderForAllSmallPairs) {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    for (std::uint64_t a = 2; a < n + 2; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const OracleSpec spec(n, a);
      const std::uint64_t r = oracle::naive_order(a, n);
      const auto seq = hsg::residue_sequence(spec, 3 * r + 1);
      std::uint64_t period = 1;
      while (true) {
        bool ok = true;
        for (std::size_t x = 0; x + period < seq.size() && ok; ++x) ok = seq[x] == seq[x + period];
        if (ok) break;
        ++period;
      }
      ASSERT_EQ(period, r) << "N=" << n << " a=" << a;
      ASSERT_EQ(hsg::multiplicative_order(a, n), r);
      for (std::size_t x = 0; x < seq.size(); ++x) ASSERT_EQ(seq[x].to_u64(), oracle::naive_pow_mod(a, x, n));
    }
  }
}

TEST(PeriodSubgroup, Examples) {
  const auto r15 = hsg::verify_period_subgroup(OracleSpec(15, 2), 60);
  EXPECT_TRUE(r15.holds());
  EXPECT_EQ(r15.order, 4u);
  const auto r21 = hsg::verify_period_subgroup(OracleSpec(21, 10), 60);
  EXPECT_TRUE(r21.holds());
  EXPECT_EQ(r21.order, 6u);
  const auto trivial = hsg::verify_period_subgroup(OracleSpec(15, 16), 60);
  EXPECT_TRUE(trivial.holds());
  EXPECT_EQ(trivial.order, 1u);
  EXPECT_THROW(hsg::verify_period_subgroup(OracleSpec(21, 10), 11), hsg::DomainError);
}

TEST(PeriodSubgroup, DefaultWindowIsFourAN) {
  for (auto [n, a] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{15, 2}, {21, 10}, {6, 5}}) {
    const OracleSpec spec(n, a);
    EXPECT_EQ(hsg::default_window(spec), 4 * a * n);
    const auto report = hsg::verify_period_subgroup(spec, hsg::default_window(spec));
    EXPECT_TRUE(report.holds());
    EXPECT_EQ(report.window, 4 * a * n);
    EXPECT_EQ(report.order, oracle::naive_order(a, n));
  }
}

TEST(ResidueSpectrum, CombAtMultiplesOfLOverR) {
  const auto spec15 = hsg::residue_spectrum(OracleSpec(15, 2), 60, 1);
  ASSERT_EQ(spec15.size(), 60u);
  double on = 0.0;
  for (std::size_t k = 0; k < 60; ++k) {
    if (k % 15 == 0) {
      EXPECT_NEAR(std::norm(spec15[k]), 15.0 * 15.0 / 60.0, 1e-10);
      on += std::norm(spec15[k]);
    } else {
      EXPECT_LT(std::abs(spec15[k]), 1e-10) << k;
    }
  }
  EXPECT_NEAR(on, 15.0, 1e-10);

  const auto spec21 = hsg::residue_spectrum(OracleSpec(21, 10), 60, 13);
  for (std::size_t k = 0; k < 60; ++k) {
    if (k % 10 == 0) {
      EXPECT_GT(std::norm(spec21[k]), 1.0);
    } else {
      EXPECT_LT(std::abs(spec21[k]), 1e-10) << k;
    }
  }
}

TEST(ResidueSpectrum, UnattainedResidueIsZero) {
  const auto s = hsg::residue_spectrum(OracleSpec(15, 2), 60, 3);
  for (const auto& c : s) EXPECT_EQ(c, std::complex<double>(0.0));
}

TEST(ResidueSpectrum, MatchesBruteForceAndCsv) {
  const OracleSpec spec(35, 3);
  const std::uint64_t len = 50;
  const auto s = hsg::residue_spectrum(spec, len, 9);
  std::vector<std::complex<double>> indicator(len);
  for (std::uint64_t x = 0; x < len; ++x) indicator[x] = oracle::naive_pow_mod(3, x, 35) == 9 ? 1.0 : 0.0;
  const auto want = oracle::brute_qft_probabilities(indicator);
  for (std::uint64_t k = 0; k < len; ++k) EXPECT_NEAR(std::norm(s[k]), want[k], 1e-12);

  std::ostringstream os;
  hsg::write_spectrum_csv(os, s);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "index,magnitude_squared");
}

#include <gtest/gtest.h>

#include <sstream>

#include "hsg/errors.hpp"
#include "hsg/exact_int.hpp"
#include "oracles.hpp"

using hsg::ExactInt;

TEST(ExactInt, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "1", "21", "18446744073709551616", "476190476190",
                           "170141183460469231731687303715884105727"}) {
    EXPECT_EQ(ExactInt::parse(text).to_string(), text);
  }
}

TEST(ExactInt, ParseRejectsGarbageAndOverflow) {
  EXPECT_THROW(ExactInt::parse(""), hsg::DomainError);
  EXPECT_THROW(ExactInt::parse("-3"), hsg::DomainError);
  EXPECT_THROW(ExactInt::parse("12a"), hsg::DomainError);
  EXPECT_THROW(ExactInt::parse("170141183460469231731687303715884105728"), hsg::OverflowError);
}

TEST(ExactInt, ProductOfTenToTheFortyOverflows) {
  ExactInt v{1};
  for (int i = 0; i < 38; ++i) v *= ExactInt{10};
  EXPECT_EQ(v.to_string(), oracle::dec_pow(10, 38));
  EXPECT_THROW(v * ExactInt{10} * ExactInt{10}, hsg::OverflowError);
  ExactInt twenty{1};
  for (int i = 0; i < 20; ++i) twenty *= ExactInt{10};
  EXPECT_THROW(twenty * twenty, hsg::OverflowError);
}

TEST(ExactInt, BoundaryArithmetic) {
  const ExactInt max = ExactInt::from_rep(ExactInt::kMax);
  EXPECT_THROW(max + ExactInt{1}, hsg::OverflowError);
  EXPECT_EQ((max - ExactInt{1}) + ExactInt{1}, max);
  EXPECT_THROW(ExactInt{1} - ExactInt{2}, hsg::OverflowError);
  EXPECT_THROW(ExactInt{1} / ExactInt{0}, hsg::DomainError);
  EXPECT_THROW(ExactInt{1} % ExactInt{0}, hsg::DomainError);
  EXPECT_THROW(ExactInt::from_rep(ExactInt::kMax + 1), hsg::OverflowError);
  EXPECT_THROW(max.to_u64(), hsg::OverflowError);
  EXPECT_EQ(ExactInt{UINT64_MAX}.to_u64(), UINT64_MAX);
}

TEST(ExactInt, PowersOfSevenMatchDecimalOracle) {
  ExactInt v{1};
  for (unsigned x = 0; x <= 45; ++x) {
    EXPECT_EQ(v.to_string(), oracle::dec_pow(7, x)) << "x=" << x;
    if (x < 45) v *= ExactInt{7};
  }
  EXPECT_THROW(v * ExactInt{7}, hsg::OverflowError);
}

TEST(ExactInt, StreamsDecimal) {
  std::ostringstream os;
  os << ExactInt::parse("4761904761");
  EXPECT_EQ(os.str(), "4761904761");
}

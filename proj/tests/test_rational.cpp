#include <gtest/gtest.h>

#include "bollobas/errors.hpp"
#include "bollobas/rational.hpp"

using bollobas::BigInt;
using bollobas::ExactRational;

TEST(ExactRational, ParseAndPrint) {
    EXPECT_EQ(ExactRational::parse("2").to_string(), "2/1");
    EXPECT_EQ(ExactRational::parse(" 6/4 ").to_string(), "3/2");
    EXPECT_EQ(ExactRational::parse("-1/3").to_string(), "-1/3");
    EXPECT_EQ(ExactRational::parse("3/-6").to_string(), "-1/2");
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1/2/3"}) {
        EXPECT_THROW((void)ExactRational::parse(bad), bollobas::InvalidInput) << bad;
    }
}

TEST(ExactRational, Arithmetic) {
    const ExactRational half(BigInt(1), BigInt(2));
    const ExactRational third(BigInt(1), BigInt(3));
    EXPECT_EQ((half + third).to_string(), "5/6");
    EXPECT_EQ((half - third).to_string(), "1/6");
    EXPECT_EQ((half * third).to_string(), "1/6");
    EXPECT_EQ((half / third).to_string(), "3/2");
    EXPECT_EQ((-half).sign(), -1);
    EXPECT_EQ(ExactRational().sign(), 0);
    EXPECT_THROW((void)(half / ExactRational(0)), bollobas::InvalidInput);
    EXPECT_THROW(ExactRational(BigInt(1), BigInt(0)), bollobas::InvalidInput);
    EXPECT_EQ(half.pow(10), ExactRational(BigInt(1), BigInt(1024)));
    EXPECT_EQ(half.pow(0), ExactRational(1));
    EXPECT_LT(third, half);
    EXPECT_TRUE(ExactRational(4).is_integer());
    EXPECT_FALSE(half.is_integer());
}

TEST(ExactRational, SumsStayExact) {
    // 1/1 + 1/2 + ... + 1/30 has a 14-digit denominator.
    ExactRational h;
    for (int k = 1; k <= 30; ++k) h += ExactRational(BigInt(1), BigInt(k));
    EXPECT_EQ(h.to_string(), "9304682830147/2329089562800");
    ExactRational back = h;
    for (int k = 1; k <= 30; ++k) back -= ExactRational(BigInt(1), BigInt(k));
    EXPECT_EQ(back, ExactRational(0));
}

TEST(ExactRational, DecimalRounding) {
    EXPECT_EQ(ExactRational(BigInt(2), BigInt(3)).to_decimal(4), "0.6667");
    EXPECT_EQ(ExactRational(BigInt(-2), BigInt(3)).to_decimal(2), "-0.67");
    EXPECT_EQ(ExactRational(BigInt(1), BigInt(8)).to_decimal(2), "0.13");
    EXPECT_EQ(ExactRational(BigInt(5), BigInt(2)).to_decimal(0), "3");
    EXPECT_EQ(ExactRational(BigInt(-1), BigInt(1000)).to_decimal(2), "0.00");
    EXPECT_EQ(ExactRational(7).to_decimal(3), "7.000");
}

#include "xtropy/numeric_text.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <random>

using namespace xtropy;

TEST(NumericText, FormatsIntegralValuesAsReals) {
    EXPECT_EQ(format_real(-1.0), "-1.0");
    EXPECT_EQ(format_real(0.0), "0.0");
    EXPECT_EQ(format_real(1e-12), "1e-12");
    EXPECT_EQ(format_real(0.2), "0.2");
    EXPECT_EQ(format_real(NAN), "nan");
    EXPECT_EQ(format_real(-INFINITY), "-inf");
}

TEST(NumericText, ParseIsStrict) {
    EXPECT_DOUBLE_EQ(parse_real("2.5"), 2.5);
    EXPECT_DOUBLE_EQ(parse_real("+3"), 3.0);
    EXPECT_DOUBLE_EQ(parse_real("-inf"), -INFINITY);
    EXPECT_THROW(parse_real(""), std::invalid_argument);
    EXPECT_THROW(parse_real("1.5x"), std::invalid_argument);
    EXPECT_THROW(parse_real("abc"), std::invalid_argument);
}

// Every formatted double reads back bit-for-bit.
TEST(NumericText, RoundTripsExactly) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100000; ++i) {
        double x = std::bit_cast<double>(rng());
        if (!std::isfinite(x)) continue;
        EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_real(format_real(x))), std::bit_cast<std::uint64_t>(x));
    }
}

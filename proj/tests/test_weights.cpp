#include "xtropy/weights.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace xtropy;

TEST(Weights, CatalogRoundTrips) {
    for (const auto& info : weight_catalog()) {
        const std::string id = info.id == "exp:alpha" ? "exp:1.5" : std::string(info.id);
        EXPECT_EQ(WeightSpec::parse(id).to_string(), id);
    }
    EXPECT_THROW(WeightSpec::parse("y2"), std::invalid_argument);
    EXPECT_THROW(WeightSpec::parse("exp:"), std::invalid_argument);
}

TEST(Weights, Values) {
    EXPECT_EQ(WeightSpec::one()(3.0), 1.0);
    EXPECT_EQ(WeightSpec::identity()(3.0), 3.0);
    EXPECT_EQ(WeightSpec::inverse()(4.0), 0.25);
    EXPECT_EQ(WeightSpec::reciprocal_shift()(1.0), 0.5);
    EXPECT_NEAR(WeightSpec::exp_decay(2.0)(0.5), std::exp(-1.0), 1e-15);
}

TEST(Weights, MonotoneMetadataMatchesSamples) {
    for (const auto& w : {WeightSpec::one(), WeightSpec::identity(), WeightSpec::inverse(),
                          WeightSpec::reciprocal_shift(), WeightSpec::exp_decay(1.0), WeightSpec::exp_decay(-1.0),
                          WeightSpec::exp_decay(0.0)}) {
        const double a = w(0.5), b = w(2.0);
        switch (w.monotone()) {
            case Monotone::increasing: EXPECT_LT(a, b) << w.to_string(); break;
            case Monotone::decreasing: EXPECT_GT(a, b) << w.to_string(); break;
            case Monotone::constant: EXPECT_EQ(a, b) << w.to_string(); break;
        }
    }
}

TEST(Weights, SingularPoints) {
    EXPECT_EQ(WeightSpec::inverse().singular_points(), std::vector<double>{0.0});
    EXPECT_EQ(WeightSpec::reciprocal_shift().singular_points(), std::vector<double>{-1.0});
    EXPECT_TRUE(WeightSpec::identity().singular_points().empty());
}

#include "xtropy/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace xtropy;

TEST(Integrate, ConstantOnUnitInterval) {
    const auto r = integrate([](double) { return 1.0; }, 0.0, 1.0, {});
    EXPECT_TRUE(r.converged());
    EXPECT_NEAR(r.value, 1.0, 1e-15);
    EXPECT_LE(r.err_estimate, 1e-12);
}

TEST(Integrate, TruncatedExponentialMass) {
    QuadratureConfig cfg;
    EndpointHints hints;
    hints.upper_truncation = -std::log(cfg.tail_mass);  // 1 - cdf = eps
    const auto r = integrate([](double y) { return std::exp(-y); }, 0.0, INFINITY, cfg, hints);
    EXPECT_TRUE(r.converged());
    EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(Integrate, GammaTwoMoment) {
    QuadratureConfig cfg;
    EndpointHints hints;
    hints.upper_truncation = 40.0;
    const auto r = integrate([](double y) { return y * std::exp(-2.0 * y); }, 0.0, INFINITY, cfg, hints);
    EXPECT_NEAR(r.value, 0.25, 1e-9);  // Gamma(2) / 2^2
}

TEST(Integrate, InfiniteBoundWithoutTruncationThrows) {
    EXPECT_THROW(integrate([](double y) { return std::exp(-y); }, 0.0, INFINITY, {}), std::invalid_argument);
    EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 0.0, {}), std::invalid_argument);
    EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 1.0, {}), std::invalid_argument);
}

TEST(Integrate, NonFiniteInteriorValueThrows) {
    EXPECT_THROW(integrate([](double y) { return y > 0.3 && y < 0.7 ? NAN : 1.0; }, 0.0, 1.0, {}),
                 QuadratureError);
}

TEST(Integrate, InvalidConfigThrows) {
    QuadratureConfig cfg;
    cfg.abs_tol = 0.0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), std::invalid_argument);
    cfg = {};
    cfg.tail_mass = 1e-2;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.max_subdivisions = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

// The embedded 10-point Gauss rule is exact through degree 19, so the error
// estimate collapses to rounding level.
TEST(Integrate, ExactOnPolynomialsUpToEmbeddedDegree) {
    for (int degree = 0; degree <= 19; ++degree) {
        const auto r = integrate([degree](double y) { return (degree + 1) * std::pow(y, degree); }, 0.0, 1.0, {});
        EXPECT_NEAR(r.value, 1.0, 1e-13) << "degree " << degree;
        EXPECT_LE(r.err_estimate, 1e-13) << "degree " << degree;
    }
}

TEST(Integrate, Additivity) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> split(0.05, 2.95);
    const Integrand f = [](double y) { return std::exp(-y) * std::sin(3 * y) + y * y; };
    for (int i = 0; i < 50; ++i) {
        const double m = split(rng);
        const auto whole = integrate(f, 0.0, 3.0, {});
        const auto left = integrate(f, 0.0, m, {});
        const auto right = integrate(f, m, 3.0, {});
        const double slack = 2.0 * (whole.err_estimate + left.err_estimate + right.err_estimate);
        EXPECT_LE(std::abs(whole.value - left.value - right.value), std::max(slack, 1e-14));
    }
}

TEST(Integrate, NonnegativeIntegrandNeverNegative) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    QuadratureConfig cfg;
    for (int i = 0; i < 30; ++i) {
        const double centre = u(rng);
        const auto r = integrate([centre](double y) { return std::exp(-50 * (y - centre) * (y - centre)); }, 0.0,
                                 5.0, cfg);
        EXPECT_GE(r.value, -cfg.abs_tol);
    }
}

TEST(Integrate, IntegrableEndpointSingularity) {
    EndpointHints hints;
    hints.singular_lower = true;
    const auto r = integrate([](double y) { return 1.0 / std::sqrt(y); }, 0.0, 1.0, {}, hints);
    EXPECT_TRUE(r.converged());
    EXPECT_NEAR(r.value, 2.0, 1e-8);

    EndpointHints upper;
    upper.singular_upper = true;
    const auto ru = integrate([](double y) { return std::pow(1.0 - y, -0.25); }, 0.0, 1.0, {}, upper);
    EXPECT_TRUE(ru.converged());
    EXPECT_NEAR(ru.value, 4.0 / 3.0, 1e-8);
}

TEST(Integrate, DivergentEndpointIsFlagged) {
    EndpointHints hints;
    hints.singular_lower = true;
    EXPECT_EQ(integrate([](double y) { return 1.0 / y; }, 0.0, 1.0, {}, hints).status,
              IntegralStatus::divergence_suspected);
    EXPECT_EQ(integrate([](double y) { return std::pow(y, -1.5); }, 0.0, 2.0, {}, hints).status,
              IntegralStatus::divergence_suspected);
    EndpointHints both;
    both.singular_lower = both.singular_upper = true;
    EXPECT_EQ(integrate([](double y) { return 1.0 / (1.0 - y); }, 0.0, 1.0, {}, both).status,
              IntegralStatus::divergence_suspected);
}

TEST(Integrate, SubdivisionBudgetIsReported) {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    const auto r = integrate([](double y) { return std::sin(200 * y) * std::sin(200 * y); }, 0.0, 10.0, cfg);
    EXPECT_EQ(r.status, IntegralStatus::max_subdivisions_reached);
    EXPECT_LE(r.subdivisions_used, 3);
    EXPECT_GE(r.err_estimate, 0.0);
}

TEST(CentralDifference, Examples) {
    EXPECT_NEAR(central_difference([](double y) { return 3 * y + 1; }, 0.7, 1e-4), 3.0, 1e-10);
    EXPECT_NEAR(central_difference([](double y) { return y * y; }, 1.0, 1e-5), 2.0, 1e-9);
    EXPECT_NEAR(central_difference([](double y) { return std::exp(-y); }, 0.0, 1e-5), -1.0, 1e-9);
    EXPECT_THROW(central_difference([](double y) { return y; }, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(central_difference([](double y) { return y; }, 0.0, -1e-3), std::invalid_argument);
}

TEST(QuadratureConfig, TailMassFromEnvironment) {
    ::setenv("XTROPY_TAIL_MASS", "1e-9", 1);
    EXPECT_DOUBLE_EQ(QuadratureConfig::from_environment().tail_mass, 1e-9);
    ::setenv("XTROPY_TAIL_MASS", "0.5", 1);
    EXPECT_THROW(QuadratureConfig::from_environment(), std::invalid_argument);
    ::unsetenv("XTROPY_TAIL_MASS");
    EXPECT_DOUBLE_EQ(QuadratureConfig::from_environment().tail_mass, 1e-12);
}

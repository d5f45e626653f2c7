#include "xtropy/distributions.hpp"
#include "xtropy/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace xtropy;

namespace {

std::vector<Distribution> catalog() {
    return {Distribution::uniform(0, 1),     Distribution::uniform(-2, 3),  Distribution::exponential(1),
            Distribution::exponential(2.5),  Distribution::weibull(2, 1),   Distribution::weibull(0.7, 1.5),
            Distribution::gamma(2, 1),       Distribution::gamma(3.5, 0.5), Distribution::gamma(0.8, 2),
            Distribution::normal(0, 1),      Distribution::normal(3, 0.25), Distribution::power(2),
            Distribution::power(0.5)};
}

}  // namespace

TEST(Distributions, PdfExamples) {
    EXPECT_DOUBLE_EQ(Distribution::uniform(0, 1).pdf(0.3), 1.0);
    EXPECT_DOUBLE_EQ(Distribution::exponential(1).pdf(0.0), 1.0);
    EXPECT_NEAR(Distribution::weibull(2, 1).pdf(1.0), 0.73575888234288464, 1e-15);
    EXPECT_EQ(Distribution::exponential(1).pdf(-0.1), 0.0);
    EXPECT_EQ(Distribution::power(2).pdf(1.5), 0.0);
}

TEST(Distributions, CdfExamples) {
    EXPECT_DOUBLE_EQ(Distribution::uniform(0, 1).cdf(0.3), 0.3);
    EXPECT_NEAR(Distribution::exponential(1).cdf(std::log(2.0)), 0.5, 1e-15);
    EXPECT_NEAR(Distribution::weibull(2, 1).cdf(1.0), 0.63212055882855768, 1e-15);
    EXPECT_NEAR(Distribution::gamma(2, 1).cdf(1.5), 0.44217459962892543, 1e-14);
    EXPECT_EQ(Distribution::normal(0, 1).cdf(-INFINITY), 0.0);
    EXPECT_EQ(Distribution::gamma(2, 1).cdf(INFINITY), 1.0);
}

TEST(Distributions, PdfDerivativeExamples) {
    EXPECT_NEAR(*Distribution::exponential(1).pdf_derivative(0.5), -std::exp(-0.5), 1e-15);
    EXPECT_EQ(*Distribution::uniform(0, 1).pdf_derivative(0.5), 0.0);
    EXPECT_NEAR(*Distribution::weibull(2, 1).pdf_derivative(1.0), -0.73575888234288464, 1e-15);
}

TEST(Distributions, PdfDerivativeUndefinedAtKinks) {
    EXPECT_FALSE(Distribution::uniform(0, 1).pdf_derivative(0.0).has_value());
    EXPECT_FALSE(Distribution::uniform(0, 1).pdf_derivative(1.0).has_value());
    EXPECT_FALSE(Distribution::exponential(1).pdf_derivative(0.0).has_value());
    EXPECT_FALSE(Distribution::power(3).pdf_derivative(1.0).has_value());
    EXPECT_EQ(*Distribution::uniform(0, 1).pdf_derivative(2.0), 0.0);
}

TEST(Distributions, QuantileExamples) {
    EXPECT_DOUBLE_EQ(Distribution::uniform(0, 1).quantile(0.25), 0.25);
    EXPECT_NEAR(Distribution::exponential(1).quantile(0.5), std::log(2.0), 1e-15);
    EXPECT_NEAR(Distribution::exponential(1).quantile(1.0 - std::exp(-1.0)), 1.0, 1e-14);
    EXPECT_NEAR(Distribution::gamma(2, 1).quantile(0.5), 1.6783469900166607, 1e-12);
    EXPECT_NEAR(Distribution::normal(0, 1).quantile(0.975), 1.9599639845400542, 1e-12);
}

TEST(Distributions, QuantileRejectsOutOfRange) {
    const auto d = Distribution::gamma(2, 1);
    EXPECT_THROW((void)d.quantile(0.0), std::domain_error);
    EXPECT_THROW((void)d.quantile(1.0), std::domain_error);
    EXPECT_THROW((void)d.quantile(-0.5), std::domain_error);
    EXPECT_THROW((void)d.inverse_survival(1.0), std::domain_error);
}

TEST(Distributions, InvalidParametersThrow) {
    EXPECT_THROW(Distribution::uniform(1, 1), std::invalid_argument);
    EXPECT_THROW(Distribution::exponential(0), std::invalid_argument);
    EXPECT_THROW(Distribution::weibull(-1, 1), std::invalid_argument);
    EXPECT_THROW(Distribution::gamma(2, 0), std::invalid_argument);
    EXPECT_THROW(Distribution::normal(0, -1), std::invalid_argument);
    EXPECT_THROW(Distribution::power(0), std::invalid_argument);
}

TEST(Distributions, ParseAndPrint) {
    EXPECT_EQ(Distribution::parse("weibull:2,1"), Distribution::weibull(2, 1));
    EXPECT_EQ(Distribution::parse("exp:0.5"), Distribution::exponential(0.5));
    EXPECT_EQ(Distribution::parse("uniform:0,1").to_string(), "uniform:0,1");
    EXPECT_EQ(Distribution::parse("normal:-1.5,2").to_string(), "normal:-1.5,2");
    EXPECT_THROW(Distribution::parse("weibull:2"), std::invalid_argument);
    EXPECT_THROW(Distribution::parse("cauchy:0,1"), std::invalid_argument);
    EXPECT_THROW(Distribution::parse("exp"), std::invalid_argument);
    EXPECT_THROW(Distribution::parse("exp:x"), std::invalid_argument);
    for (const auto& info : family_catalog()) {
        const std::string text = std::string(info.id) + (info.arity == 1 ? ":2" : ":1,2");
        EXPECT_EQ(Distribution::parse(text).family(), info.family) << text;
    }
}

TEST(Distributions, PmfValidation) {
    EXPECT_NO_THROW(DiscretePmf({0.5, 0.5}));
    EXPECT_NO_THROW(DiscretePmf::parse("1/3,1/3,1/3"));
    EXPECT_THROW(DiscretePmf({0.5, 0.6}), std::invalid_argument);
    EXPECT_THROW(DiscretePmf({1.2, -0.2}), std::invalid_argument);
    EXPECT_THROW(DiscretePmf({}), std::invalid_argument);
    EXPECT_EQ(DiscretePmf::parse("0.25,0.75").size(), 2u);
}

// 1000 random interior points per family: pdf >= 0, cdf nondecreasing,
// cdf(quantile(p)) = p.
TEST(DistributionProperties, EvaluatorsAreConsistent) {
    std::mt19937_64 rng(20241014);
    std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
    for (const auto& d : catalog()) {
        SCOPED_TRACE(d.to_string());
        for (int i = 0; i < 1000; ++i) {
            const double p1 = unit(rng), p2 = unit(rng);
            const double y1 = d.quantile(std::min(p1, p2));
            const double y2 = d.quantile(std::max(p1, p2));
            EXPECT_GE(d.pdf(y1), 0.0);
            EXPECT_LE(d.cdf(y1), d.cdf(y2));
            EXPECT_NEAR(d.cdf(d.quantile(p1)), p1, 1e-10);
            EXPECT_NEAR(d.sf(d.inverse_survival(p1)), p1, 1e-10);
            EXPECT_NEAR(d.cdf(y1) + d.sf(y1), 1.0, 1e-14);
        }
    }
}

TEST(DistributionProperties, DensityIntegratesToOne) {
    QuadratureConfig cfg;
    for (const auto& d : catalog()) {
        SCOPED_TRACE(d.to_string());
        const Support s = d.support();
        EndpointHints hints;
        hints.lower_truncation = d.quantile(cfg.tail_mass);
        hints.upper_truncation = d.inverse_survival(cfg.tail_mass);
        hints.singular_lower = d.pdf_unbounded_at_lower();
        const auto r = integrate([&](double y) { return d.pdf(y); }, s.lower, s.upper, cfg, hints);
        EXPECT_TRUE(r.converged());
        EXPECT_NEAR(r.value, 1.0, 1e-8);
    }
}

TEST(DistributionProperties, DerivativeMatchesCentralDifference) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    for (const auto& d : catalog()) {
        SCOPED_TRACE(d.to_string());
        const Integrand pdf = [&](double y) { return d.pdf(y); };
        for (int i = 0; i < 200; ++i) {
            const double y = d.quantile(unit(rng));
            const auto exact = d.pdf_derivative(y);
            ASSERT_TRUE(exact.has_value());
            const double h = default_difference_step(y);
            if (y - h <= d.support().lower || y + h >= d.support().upper) continue;
            const double approx = central_difference(pdf, y, h);
            EXPECT_LE(std::abs(*exact - approx), 1e-5 * std::max(1.0, std::abs(*exact))) << "y=" << y;
        }
    }
}

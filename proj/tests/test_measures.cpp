#include "xtropy/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace xtropy;

namespace {

const Distribution kUnit = Distribution::uniform(0, 1);
const Distribution kExp1 = Distribution::exponential(1);
const Distribution kExp2 = Distribution::exponential(2);

void expect_value(const MeasureValue& m, double expected, double tol) {
    ASSERT_TRUE(m.is_finite()) << m.diagnostic;
    EXPECT_NEAR(m.value, expected, tol);
}

std::vector<Distribution> catalog() {
    return {kUnit,
            Distribution::uniform(-1, 2),
            kExp1,
            Distribution::exponential(0.5),
            Distribution::weibull(2, 1),
            Distribution::weibull(1.5, 2),
            Distribution::gamma(2, 1),
            Distribution::gamma(3, 2),
            Distribution::normal(0, 1),
            Distribution::power(2)};
}

}  // namespace

TEST(ConditionalDensity, Examples) {
    const auto g = conditional_density(kUnit, {0.2, 0.7});
    EXPECT_NEAR(g(0.5), 2.0, 1e-15);
    EXPECT_EQ(g(0.8), 0.0);
    const auto full = conditional_density(kExp1, {-5.0, INFINITY});
    for (double y : {0.1, 0.5, 2.0, 7.0}) EXPECT_DOUBLE_EQ(full(y), kExp1.pdf(y));
    EXPECT_THROW(conditional_density(kUnit, {2.0, 3.0}), std::domain_error);
    EXPECT_THROW(IntervalCondition(0.5, 0.5), std::invalid_argument);
}

TEST(ConditionalDensity, IntegratesToOne) {
    const auto cd = ConditionedDensity::make(Distribution::gamma(2, 1), IntervalCondition{1.0, 4.0});
    ASSERT_TRUE(cd);
    const auto r = integrate([&](double y) { return cd->pdf(y); }, cd->integration_lower(),
                             cd->integration_upper(), {});
    EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(ConditionalDensity, DeepTailWindowKeepsMass) {
    // Entirely beyond the upper truncation quantile of Exp(1).
    const auto cd = ConditionedDensity::make(kExp1, IntervalCondition{40.0, INFINITY});
    ASSERT_TRUE(cd);
    EXPECT_GT(cd->mass(), 0.0);
    expect_value(extropy(kExp1, IntervalCondition{40.0, INFINITY}), -0.25, 1e-9);  // memoryless
}

TEST(Shannon, Examples) {
    expect_value(shannon_entropy(kUnit), 0.0, 1e-12);
    expect_value(shannon_entropy(kExp1), 1.0, 1e-9);
    expect_value(shannon_entropy(kUnit, IntervalCondition{0.2, 0.7}), std::log(0.5), 1e-12);
    expect_value(shannon_entropy(Distribution::gamma(2, 1)), 1.5772156649015329, 1e-8);
    expect_value(shannon_entropy(Distribution::normal(0, 1)), 1.4189385332046727, 1e-8);
}

TEST(Renyi, Examples) {
    expect_value(renyi_entropy(kUnit, 2), 0.0, 1e-12);
    expect_value(renyi_entropy(kExp1, 2), std::log(2.0), 1e-9);
    expect_value(renyi_entropy(kExp2, 2), 0.0, 1e-9);
    EXPECT_EQ(renyi_entropy(kExp1, 1.0).status, MeasureStatus::undefined);
    EXPECT_EQ(renyi_entropy(kExp1, -2.0).status, MeasureStatus::undefined);
}

TEST(Tsallis, Examples) {
    expect_value(tsallis_entropy(kUnit, 3), 0.0, 1e-12);
    expect_value(tsallis_entropy(kExp1, 2), 0.5, 1e-9);
    expect_value(tsallis_entropy(kExp2, 2), 0.0, 1e-9);
    EXPECT_EQ(tsallis_entropy(kExp1, 1.0).status, MeasureStatus::undefined);
}

TEST(Kapur, Examples) {
    expect_value(kapur_entropy(kUnit, 2, 3), 0.0, 1e-12);
    expect_value(kapur_entropy(kExp1, 2, 3), std::log(1.5), 1e-9);
    expect_value(kapur_entropy(kExp1, 3, 2), std::log(1.5), 1e-9);
    EXPECT_EQ(kapur_entropy(kExp1, 2, 2).status, MeasureStatus::undefined);
}

TEST(Varma, Examples) {
    expect_value(varma_entropy(kUnit, 1.5, 2), 0.0, 1e-12);
    expect_value(varma_entropy(kExp1, 1.5, 2), 2.0 * std::log(1.0 / 2.5), 1e-8);
    EXPECT_EQ(varma_entropy(kExp1, 0.5, 2).status, MeasureStatus::undefined);
    EXPECT_EQ(varma_entropy(kExp1, 0.5, 0.8).status, MeasureStatus::undefined);
    EXPECT_EQ(varma_entropy(kExp1, 2.0, 2.0).status, MeasureStatus::undefined);
}

TEST(CumulativePastEntropy, Examples) {
    expect_value(cumulative_past_entropy(kUnit), 0.25, 1e-10);
    expect_value(cumulative_past_entropy(kExp1), 0.64493406684822644, 1e-8);
    const auto full = cumulative_past_entropy(kExp1, IntervalCondition{-1.0, INFINITY});
    expect_value(full, cumulative_past_entropy(kExp1).value, 1e-15);
    // Uniform(0.2, 0.7) is a rescaled uniform: xi = (d - c) / 4.
    expect_value(cumulative_past_entropy(kUnit, IntervalCondition{0.2, 0.7}), 0.125, 1e-10);
}

TEST(Extropy, Examples) {
    expect_value(extropy(kUnit), -0.5, 1e-12);
    expect_value(extropy(kExp1), -0.25, 1e-9);
    expect_value(extropy(kExp2), -0.5, 1e-9);
    expect_value(extropy(kUnit, IntervalCondition{0.2, 0.7}), -1.0, 1e-12);
    expect_value(extropy(Distribution::weibull(2, 1), IntervalCondition{0.2, 1.5}), -0.40873235469236195, 1e-9);
    expect_value(extropy(Distribution::gamma(2, 1), IntervalCondition{0.5, 3.0}), -0.21230087395601919, 1e-9);
    EXPECT_EQ(extropy(kUnit, IntervalCondition{1.5, 2.5}).status, MeasureStatus::undefined);
}

TEST(WeightedExtropy, Examples) {
    for (const auto& d : catalog()) {
        const auto a = weighted_extropy(d, WeightSpec::one());
        const auto b = extropy(d);
        ASSERT_TRUE(a.is_finite());
        EXPECT_EQ(a.value, b.value) << d.to_string();
    }
    for (double mu : {0.5, 1.0, 2.0, 7.0}) {
        expect_value(weighted_extropy(Distribution::exponential(mu), WeightSpec::identity()), -0.125, 1e-9);
    }
    expect_value(weighted_extropy(kUnit, WeightSpec::identity()), -0.25, 1e-12);
    expect_value(weighted_extropy(Distribution::gamma(2, 1), WeightSpec::inverse()), -0.125, 1e-9);
    expect_value(weighted_extropy(Distribution::normal(0, 1), WeightSpec::exp_decay(1)), -0.18110844127644778,
                 1e-9);
}

TEST(WeightedExtropy, DivergentAndUndefined) {
    const auto div = weighted_extropy(kExp1, WeightSpec::inverse());
    EXPECT_EQ(div.status, MeasureStatus::divergent);
    EXPECT_TRUE(std::isnan(div.value));
    EXPECT_EQ(weighted_extropy(kUnit, WeightSpec::inverse()).status, MeasureStatus::divergent);
    // Away from the pole the integral is ordinary.
    EXPECT_TRUE(weighted_extropy(kExp1, WeightSpec::inverse(), IntervalCondition{0.5, 2.0}).is_finite());
    // w(y) = y is negative on the left half of a normal.
    EXPECT_EQ(weighted_extropy(Distribution::normal(0, 1), WeightSpec::identity()).status,
              MeasureStatus::undefined);
}

TEST(Measures, DynamicDivergenceAtDensityPole) {
    // Gamma(1/2): g^2 ~ 1/y and g^3 ~ y^{-3/2} at the origin.
    const auto g = Distribution::gamma(0.5, 1);
    EXPECT_EQ(extropy(g).status, MeasureStatus::divergent);
    EXPECT_EQ(renyi_entropy(g, 3).status, MeasureStatus::divergent);
    // but g^{1.5} ~ y^{-3/4} is integrable
    EXPECT_TRUE(renyi_entropy(g, 1.5).is_finite());
    EXPECT_TRUE(shannon_entropy(g).is_finite());
}

TEST(Discrete, EntropyExamples) {
    EXPECT_NEAR(discrete_entropy(DiscretePmf({0.5, 0.5})), std::log(2.0), 1e-15);
    EXPECT_EQ(discrete_entropy(DiscretePmf({1.0, 0.0})), 0.0);
    EXPECT_NEAR(discrete_entropy(DiscretePmf::parse("1/3,1/3,1/3")), std::log(3.0), 1e-15);
}

TEST(Discrete, ExtropyExamples) {
    EXPECT_NEAR(discrete_extropy(DiscretePmf({0.5, 0.5})), std::log(2.0), 1e-15);
    EXPECT_EQ(discrete_extropy(DiscretePmf({1.0, 0.0})), 0.0);
    EXPECT_NEAR(discrete_extropy(DiscretePmf::parse("1/3,1/3,1/3")), 2.0 * std::log(1.5), 1e-15);
    EXPECT_NEAR(discrete_extropy(DiscretePmf({0.2, 0.3, 0.5})),
                -(0.8 * std::log(0.8) + 0.7 * std::log(0.7) + 0.5 * std::log(0.5)), 1e-15);
}

TEST(Discrete, TwoPointIdentity) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double p = u(rng);
        const DiscretePmf pmf({p, 1.0 - p});
        EXPECT_EQ(discrete_extropy(pmf), discrete_entropy(pmf));
    }
}

TEST(MeasureProperties, ExtropyIsNonpositive) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.001, 0.999);
    QuadratureConfig cfg;
    for (const auto& d : catalog()) {
        for (int i = 0; i < 100; ++i) {
            double p1 = u(rng), p2 = u(rng);
            if (p1 > p2) std::swap(p1, p2);
            if (p2 - p1 < 1e-3) continue;
            const auto m = extropy(d, IntervalCondition{d.quantile(p1), d.quantile(p2)}, cfg);
            ASSERT_TRUE(m.is_finite()) << d.to_string();
            EXPECT_LE(m.value, cfg.abs_tol);
        }
    }
}

TEST(MeasureProperties, ScaleLaw) {
    const double base = extropy(kUnit).value;
    for (double a : {0.5, 2.0, 5.0}) {
        EXPECT_NEAR(extropy(Distribution::uniform(0, a)).value, base / a, 1e-8);
    }
}

TEST(MeasureProperties, OrderLimitRecoversShannon) {
    for (const auto& d : {kUnit, kExp1}) {
        const double h = shannon_entropy(d).value;
        for (double theta : {1.0 - 1e-4, 1.0 + 1e-4}) {
            EXPECT_NEAR(renyi_entropy(d, theta).value, h, 1e-3);
            EXPECT_NEAR(tsallis_entropy(d, theta).value, h, 1e-3);
        }
    }
}

TEST(MeasureProperties, KapurSwapSymmetry) {
    for (const auto& d : catalog()) {
        const auto a = kapur_entropy(d, 2.0, 3.5);
        const auto b = kapur_entropy(d, 3.5, 2.0);
        ASSERT_TRUE(a.is_finite() && b.is_finite());
        EXPECT_NEAR(a.value, b.value, 1e-10) << d.to_string();
    }
}

TEST(MeasureProperties, ConditioningOnSupersetIsIdentity) {
    QuadratureConfig cfg;
    const WeightSpec w = WeightSpec::exp_decay(0.5);
    const MeasureParams params{2.0, 3.0};
    const MeasureParams varma_params{1.5, 2.0};
    for (const auto& d : catalog()) {
        const Support s = d.support();
        const IntervalCondition wide{s.bounded_below() ? s.lower - 1.0 : -INFINITY,
                                     s.bounded_above() ? s.upper + 1.0 : INFINITY};
        for (const auto& m : measure_catalog()) {
            const auto& p = m.kind == MeasureKind::varma ? varma_params : params;
            const auto plain = evaluate_measure(m.kind, d, p, w, std::nullopt, cfg);
            const auto cond = evaluate_measure(m.kind, d, p, w, wide, cfg);
            ASSERT_EQ(plain.status, cond.status) << d.to_string() << " " << m.id;
            if (plain.is_finite()) {
                EXPECT_NEAR(plain.value, cond.value, 2 * cfg.abs_tol) << d.to_string() << " " << m.id;
            }
        }
    }
}

TEST(MeasureCatalog, ParsesEveryListedId) {
    for (const auto& m : measure_catalog()) EXPECT_EQ(parse_measure(m.id), m.kind);
    EXPECT_THROW(parse_measure("negentropy"), std::invalid_argument);
}

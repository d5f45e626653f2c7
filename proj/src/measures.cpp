#include "xtropy/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace xtropy {

namespace {

constexpr std::array<MeasureInfo, 8> kMeasures{{
    {MeasureKind::shannon, "shannon", ""},
    {MeasureKind::renyi, "renyi", "theta"},
    {MeasureKind::tsallis, "tsallis", "theta"},
    {MeasureKind::kapur, "kapur", "theta,lambda"},
    {MeasureKind::varma, "varma", "theta,lambda"},
    {MeasureKind::cpe, "cpe", ""},
    {MeasureKind::extropy, "extropy", ""},
    {MeasureKind::wextropy, "wextropy", "weight"},
}};

// Threshold below which a density value at a weight pole counts as vanishing.
constexpr double kVanishingDensity = 1e-12;

// Integrates integrand(y, density) over the conditioned window, splitting at
// the given interior break points and flagging the listed singular ends.
template <typename F>
IntegralResult integrate_window(const ConditionedDensity& cd, F&& integrand, const QuadratureConfig& cfg,
                                const std::vector<double>& poles = {}) {
    std::vector<double> cuts{cd.integration_lower()};
    for (double p : poles) {
        if (p > cd.integration_lower() && p < cd.integration_upper()) cuts.push_back(p);
    }
    cuts.push_back(cd.integration_upper());
    std::sort(cuts.begin(), cuts.end());

    auto is_pole = [&](double x) { return std::find(poles.begin(), poles.end(), x) != poles.end(); };
    const Integrand f = [&](double y) { return integrand(y, cd.pdf(y)); };

    IntegralResult total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        EndpointHints hints;
        hints.singular_lower = is_pole(cuts[i]) || (i == 0 && cd.singular_lower());
        hints.singular_upper = is_pole(cuts[i + 1]);
        const IntegralResult piece = integrate(f, cuts[i], cuts[i + 1], cfg, hints);
        total.value += piece.value;
        total.err_estimate += piece.err_estimate;
        total.subdivisions_used += piece.subdivisions_used;
        if (piece.status == IntegralStatus::divergence_suspected ||
            (piece.status != IntegralStatus::converged && total.status == IntegralStatus::converged)) {
            total.status = piece.status;
        }
    }
    if (total.status == IntegralStatus::converged && total.err_estimate > cfg.target(total.value)) {
        total.status = IntegralStatus::max_subdivisions_reached;
    }
    return total;
}

// Maps a non-converged integral onto a measure status; empty when converged.
std::optional<MeasureValue> failure(const IntegralResult& r) {
    switch (r.status) {
        case IntegralStatus::converged: return std::nullopt;
        case IntegralStatus::divergence_suspected:
            return MeasureValue::divergent("integral diverges (quadrature panels do not decay)");
        case IntegralStatus::max_subdivisions_reached:
            return MeasureValue::undefined("quadrature did not reach tolerance");
    }
    return MeasureValue::undefined("unknown quadrature status");
}

MeasureValue zero_mass() { return MeasureValue::undefined("conditioning interval has zero probability mass"); }

// Shared driver: builds the conditioned density, integrates, then maps the
// integral(s) to the measure value.
template <typename Body>
MeasureValue with_density(const Distribution& dist, const OptCondition& S, const QuadratureConfig& cfg,
                          Body&& body) {
    cfg.validate();
    const auto cd = ConditionedDensity::make(dist, S, cfg);
    if (!cd) return zero_mass();
    try {
        return body(*cd);
    } catch (const QuadratureError& e) {
        return MeasureValue::undefined(e.what());
    }
}

// Integral of the conditioned density raised to `order`.
IntegralResult power_integral(const ConditionedDensity& cd, double order, const QuadratureConfig& cfg) {
    return integrate_window(
        cd, [order](double, double g) { return g > 0.0 ? std::pow(g, order) : 0.0; }, cfg);
}

bool valid_order(double theta) { return std::isfinite(theta) && theta > 0.0 && theta != 1.0; }

}  // namespace

IntervalCondition::IntervalCondition(double lower, double upper) : c(lower), d(upper) {
    if (std::isnan(c) || std::isnan(d) || !(c < d)) {
        throw std::invalid_argument("interval condition requires c < d");
    }
}

std::string_view to_string(MeasureStatus status) noexcept {
    switch (status) {
        case MeasureStatus::finite: return "finite";
        case MeasureStatus::divergent: return "divergent";
        case MeasureStatus::undefined: return "undefined";
    }
    return "?";
}

MeasureValue MeasureValue::divergent(std::string why) {
    return {std::numeric_limits<double>::quiet_NaN(), 0.0, MeasureStatus::divergent, std::move(why)};
}

MeasureValue MeasureValue::undefined(std::string why) {
    return {std::numeric_limits<double>::quiet_NaN(), 0.0, MeasureStatus::undefined, std::move(why)};
}

std::optional<ConditionedDensity> ConditionedDensity::make(const Distribution& dist, const OptCondition& S,
                                                           const QuadratureConfig& cfg) {
    const Support s = dist.support();
    const double lo = S ? std::max(S->c, s.lower) : s.lower;
    const double hi = S ? std::min(S->d, s.upper) : s.upper;
    if (!(lo < hi)) return std::nullopt;

    ConditionedDensity cd(dist);
    cd.lo_ = lo;
    cd.hi_ = hi;
    cd.upper_half_ = dist.cdf(lo) > 0.5;
    cd.mass_ = cd.upper_half_ ? dist.sf(lo) - dist.sf(hi) : dist.cdf(hi) - dist.cdf(lo);
    if (!(cd.mass_ > 0.0) || !std::isfinite(cd.mass_)) return std::nullopt;

    // Infinite ends are cut where the conditioned tail holds tail_mass of the
    // window's probability.
    const double eps = cfg.tail_mass;
    constexpr double kMinProb = std::numeric_limits<double>::min();
    double a = lo, b = hi;
    if (std::isinf(a)) a = dist.quantile(std::max(eps * dist.cdf(b), kMinProb));
    if (std::isinf(b)) b = dist.inverse_survival(std::max(eps * dist.sf(a), kMinProb));
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) return std::nullopt;
    cd.int_lo_ = a;
    cd.int_hi_ = b;
    return cd;
}

double ConditionedDensity::pdf(double y) const noexcept {
    if (!(y > lo_ && y < hi_)) return 0.0;
    return dist_.pdf(y) / mass_;
}

double ConditionedDensity::cdf(double y) const noexcept {
    if (y <= lo_) return 0.0;
    if (y >= hi_) return 1.0;
    const double num = upper_half_ ? dist_.sf(lo_) - dist_.sf(y) : dist_.cdf(y) - dist_.cdf(lo_);
    return std::clamp(num / mass_, 0.0, 1.0);
}

bool ConditionedDensity::singular_lower() const noexcept {
    return int_lo_ == dist_.support().lower && dist_.pdf_unbounded_at_lower();
}

Integrand conditional_density(const Distribution& dist, const IntervalCondition& S) {
    auto cd = ConditionedDensity::make(dist, S);
    if (!cd) throw std::domain_error("conditioning interval has zero probability mass");
    return [cd = *cd](double y) { return cd.pdf(y); };
}

MeasureValue shannon_entropy(const Distribution& dist, const OptCondition& S, const QuadratureConfig& cfg) {
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = integrate_window(
            cd, [](double, double g) { return g > 0.0 ? -g * std::log(g) : 0.0; }, cfg);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite(r.value, r.err_estimate);
    });
}

MeasureValue renyi_entropy(const Distribution& dist, double theta, const OptCondition& S,
                           const QuadratureConfig& cfg) {
    if (!valid_order(theta)) return MeasureValue::undefined("renyi entropy requires theta > 0, theta != 1");
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = power_integral(cd, theta, cfg);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite(std::log(r.value) / (1.0 - theta),
                                    r.err_estimate / (r.value * std::abs(1.0 - theta)));
    });
}

MeasureValue tsallis_entropy(const Distribution& dist, double theta, const OptCondition& S,
                             const QuadratureConfig& cfg) {
    if (!valid_order(theta)) return MeasureValue::undefined("tsallis entropy requires theta > 0, theta != 1");
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = power_integral(cd, theta, cfg);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite((1.0 - r.value) / (theta - 1.0), r.err_estimate / std::abs(theta - 1.0));
    });
}

MeasureValue kapur_entropy(const Distribution& dist, double theta, double lambda, const OptCondition& S,
                           const QuadratureConfig& cfg) {
    if (!(std::isfinite(theta) && std::isfinite(lambda) && theta > 0.0 && lambda > 0.0 && theta != lambda)) {
        return MeasureValue::undefined("kapur entropy requires theta > 0, lambda > 0, theta != lambda");
    }
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto rt = power_integral(cd, theta, cfg);
        if (auto bad = failure(rt)) return *bad;
        const auto rl = power_integral(cd, lambda, cfg);
        if (auto bad = failure(rl)) return *bad;
        const double gap = lambda - theta;
        return MeasureValue::finite((std::log(rt.value) - std::log(rl.value)) / gap,
                                    (rt.err_estimate / rt.value + rl.err_estimate / rl.value) / std::abs(gap));
    });
}

MeasureValue varma_entropy(const Distribution& dist, double theta, double lambda, const OptCondition& S,
                           const QuadratureConfig& cfg) {
    if (!(std::isfinite(theta) && std::isfinite(lambda) && lambda >= 1.0 && lambda - 1.0 < theta &&
          theta < lambda)) {
        return MeasureValue::undefined("varma entropy requires lambda >= 1 and lambda - 1 < theta < lambda");
    }
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = power_integral(cd, theta + lambda - 1.0, cfg);
        if (auto bad = failure(r)) return *bad;
        const double gap = lambda - theta;
        return MeasureValue::finite(std::log(r.value) / gap, r.err_estimate / (r.value * gap));
    });
}

MeasureValue cumulative_past_entropy(const Distribution& dist, const OptCondition& S,
                                     const QuadratureConfig& cfg) {
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = integrate_window(
            cd,
            [&cd](double y, double) {
                const double F = cd.cdf(y);
                return (F > 0.0 && F < 1.0) ? -F * std::log(F) : 0.0;
            },
            cfg);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite(r.value, r.err_estimate);
    });
}

MeasureValue extropy(const Distribution& dist, const OptCondition& S, const QuadratureConfig& cfg) {
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const auto r = integrate_window(cd, [](double, double g) { return g * g; }, cfg);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite(-0.5 * r.value, 0.5 * r.err_estimate);
    });
}

MeasureValue weighted_extropy(const Distribution& dist, const WeightSpec& w, const OptCondition& S,
                              const QuadratureConfig& cfg) {
    return with_density(dist, S, cfg, [&](const ConditionedDensity& cd) {
        const Support nonneg = w.nonnegative_on();
        if (cd.lower() < nonneg.lower || cd.upper() > nonneg.upper) {
            return MeasureValue::undefined("weight " + w.to_string() + " is negative on part of the domain");
        }
        // A pole of w where the density does not vanish makes the integral diverge.
        std::vector<double> poles;
        for (double p : w.singular_points()) {
            if (p < cd.lower() || p > cd.upper()) continue;
            const double g = cd.distribution().pdf(p) / cd.mass();
            if (!(g <= kVanishingDensity)) {
                return MeasureValue::divergent("weight " + w.to_string() + " has a pole where the density is positive");
            }
            poles.push_back(p);
        }
        const auto r = integrate_window(
            cd, [&w](double y, double g) { return g > 0.0 ? w(y) * g * g : 0.0; }, cfg, poles);
        if (auto bad = failure(r)) return *bad;
        return MeasureValue::finite(-0.5 * r.value, 0.5 * r.err_estimate);
    });
}

double discrete_entropy(const DiscretePmf& pmf) {
    double h = 0.0;
    for (double p : pmf.probabilities()) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

double discrete_extropy(const DiscretePmf& pmf) {
    // With two outcomes 1 - p_1 = p_2 and 1 - p_2 = p_1, so the sums coincide term by term.
    if (pmf.size() == 2) return discrete_entropy(pmf);
    double j = 0.0;
    for (double p : pmf.probabilities()) {
        const double q = 1.0 - p;
        if (q > 0.0) j -= q * std::log(q);
    }
    return j;
}

std::span<const MeasureInfo> measure_catalog() noexcept { return kMeasures; }

MeasureKind parse_measure(std::string_view id) {
    for (const auto& m : kMeasures) {
        if (m.id == id) return m.kind;
    }
    throw std::invalid_argument("unknown measure '" + std::string(id) + "'");
}

std::string_view to_string(MeasureKind kind) noexcept {
    for (const auto& m : kMeasures) {
        if (m.kind == kind) return m.id;
    }
    return "?";
}

MeasureValue evaluate_measure(MeasureKind kind, const Distribution& dist, const MeasureParams& params,
                              const WeightSpec& w, const OptCondition& S, const QuadratureConfig& cfg) {
    switch (kind) {
        case MeasureKind::shannon: return shannon_entropy(dist, S, cfg);
        case MeasureKind::renyi: return renyi_entropy(dist, params.theta, S, cfg);
        case MeasureKind::tsallis: return tsallis_entropy(dist, params.theta, S, cfg);
        case MeasureKind::kapur: return kapur_entropy(dist, params.theta, params.lambda, S, cfg);
        case MeasureKind::varma: return varma_entropy(dist, params.theta, params.lambda, S, cfg);
        case MeasureKind::cpe: return cumulative_past_entropy(dist, S, cfg);
        case MeasureKind::extropy: return extropy(dist, S, cfg);
        case MeasureKind::wextropy: return weighted_extropy(dist, w, S, cfg);
    }
    return MeasureValue::undefined("unknown measure");
}

}  // namespace xtropy

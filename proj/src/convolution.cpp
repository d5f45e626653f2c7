#include "xtropy/convolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xtropy {

namespace {

constexpr double kVanishingDensity = 1e-12;

constexpr std::array<PhiInfo, 4> kPhis{{
    {"one", "phi(v) = 1", true},
    {"v", "phi(v) = v", true},
    {"v2", "phi(v) = v^2", true},
    {"exp_neg", "phi(v) = exp(-v)", false},
}};

// Inner integrals run ten times tighter than the outer one so their error
// stays inside the outer estimate.
QuadratureConfig inner_config(const QuadratureConfig& cfg) {
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / 10.0;
    inner.rel_tol = cfg.rel_tol / 10.0;
    return inner;
}

// Outer integral over [0, range] of integrand(v, h(v)). Inner failures are
// reported through `inner_ok`.
template <typename F>
IntegralResult integrate_over_v(const DiffDensityContext& ctx, F&& integrand, const std::vector<double>& poles,
                                bool& inner_ok) {
    const double range = ctx.range();
    std::vector<double> cuts{0.0};
    for (double p : poles) {
        if (p > 0.0 && p < range) cuts.push_back(p);
    }
    cuts.push_back(range);
    std::sort(cuts.begin(), cuts.end());
    auto is_pole = [&](double x) { return std::find(poles.begin(), poles.end(), x) != poles.end(); };

    const Integrand f = [&](double v) {
        const IntegralResult h = ctx.density(v);
        if (!h.converged()) inner_ok = false;
        return integrand(v, h.value);
    };

    IntegralResult total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        EndpointHints hints;
        hints.singular_lower = is_pole(cuts[i]) || (i == 0 && ctx.conditioned().singular_lower());
        hints.singular_upper = is_pole(cuts[i + 1]);
        const IntegralResult piece = integrate(f, cuts[i], cuts[i + 1], ctx.config(), hints);
        total.value += piece.value;
        total.err_estimate += piece.err_estimate;
        total.subdivisions_used += piece.subdivisions_used;
        if (piece.status == IntegralStatus::divergence_suspected ||
            (piece.status != IntegralStatus::converged && total.status == IntegralStatus::converged)) {
            total.status = piece.status;
        }
    }
    return total;
}

std::optional<MeasureValue> failure(const IntegralResult& r, bool inner_ok) {
    if (r.status == IntegralStatus::divergence_suspected) {
        return MeasureValue::divergent("integral over v diverges (quadrature panels do not decay)");
    }
    if (!inner_ok) return MeasureValue::undefined("inner integral for h(v) did not reach tolerance");
    if (r.status != IntegralStatus::converged) return MeasureValue::undefined("quadrature did not reach tolerance");
    return std::nullopt;
}

}  // namespace

std::string_view to_string(DiffConvention c) noexcept {
    return c == DiffConvention::normalized ? "normalized" : "paper_literal";
}

DiffConvention parse_convention(std::string_view text) {
    if (text == "normalized") return DiffConvention::normalized;
    if (text == "paper_literal") return DiffConvention::paper_literal;
    throw std::invalid_argument("convention must be normalized or paper_literal");
}

std::optional<DiffDensityContext> DiffDensityContext::make(const Distribution& dist, const IntervalCondition& S,
                                                           DiffConvention convention, const QuadratureConfig& cfg) {
    cfg.validate();
    auto cd = ConditionedDensity::make(dist, S, cfg);
    if (!cd) return std::nullopt;
    return DiffDensityContext(std::move(*cd), convention, cfg);
}

double DiffDensityContext::range() const noexcept {
    return cd_.integration_upper() - cd_.integration_lower();
}

IntegralResult DiffDensityContext::density(double v) const {
    const double lo = cd_.integration_lower();
    const double hi = cd_.integration_upper();
    if (!(v >= 0.0) || !(lo + v < hi)) return {};

    EndpointHints hints;
    // g(y - v) sits on its lower support end at y = lo + v
    hints.singular_lower = cd_.singular_lower();
    const auto& cd = cd_;
    const IntegralResult r = integrate([&cd, v](double y) { return cd.pdf(y - v) * cd.pdf(y); }, lo + v, hi,
                                       inner_config(cfg_), hints);
    if (convention_ == DiffConvention::paper_literal) return r;
    return {2.0 * r.value, 2.0 * r.err_estimate, r.subdivisions_used, r.status};
}

double diff_density(const DiffDensityContext& ctx, double v) { return ctx.density(v).value; }

MeasureValue conditional_expectation(const DiffDensityContext& ctx, const Integrand& phi) {
    // The normalized density is twice the literal one.
    const double scale = ctx.convention() == DiffConvention::normalized ? 1.0 : 2.0;
    bool inner_ok = true;
    try {
        const auto r = integrate_over_v(
            ctx, [&](double v, double h) { return h > 0.0 ? phi(v) * scale * h : 0.0; }, {}, inner_ok);
        if (auto bad = failure(r, inner_ok)) return *bad;
        return MeasureValue::finite(r.value, r.err_estimate);
    } catch (const QuadratureError& e) {
        return MeasureValue::undefined(e.what());
    }
}

MeasureValue weighted_extropy_of_diff(const DiffDensityContext& ctx, const WeightSpec& w) {
    const double range = ctx.range();
    const Support nonneg = w.nonnegative_on();
    if (0.0 < nonneg.lower || range > nonneg.upper) {
        return MeasureValue::undefined("weight " + w.to_string() + " is negative on part of [0, d-c]");
    }
    std::vector<double> poles;
    try {
        for (double p : w.singular_points()) {
            if (p < 0.0 || p > range) continue;
            const double h = ctx.density(p).value;
            if (!(h <= kVanishingDensity)) {
                return MeasureValue::divergent("weight " + w.to_string() + " has a pole where h(v) is positive");
            }
            poles.push_back(p);
        }
        bool inner_ok = true;
        const auto r = integrate_over_v(
            ctx, [&w](double v, double h) { return h > 0.0 ? w(v) * h * h : 0.0; }, poles, inner_ok);
        if (auto bad = failure(r, inner_ok)) return *bad;
        return MeasureValue::finite(-0.5 * r.value, 0.5 * r.err_estimate);
    } catch (const QuadratureError& e) {
        return MeasureValue::undefined(e.what());
    }
}

std::span<const PhiInfo> phi_catalog() noexcept { return kPhis; }

Integrand parse_phi(std::string_view id) {
    if (id == "one") return [](double) { return 1.0; };
    if (id == "v") return [](double v) { return v; };
    if (id == "v2") return [](double v) { return v * v; };
    if (id == "exp_neg") return [](double v) { return std::exp(-v); };
    throw std::invalid_argument("unknown phi '" + std::string(id) + "' (expected one, v, v2, exp_neg)");
}

}  // namespace xtropy

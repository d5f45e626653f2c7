#include "xtropy/distributions.hpp"

#include "xtropy/numeric_text.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace xtropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

constexpr std::array<FamilyInfo, 6> kFamilies{{
    {Family::uniform, "uniform", "uniform:a,b", 2},
    {Family::exponential, "exp", "exp:mu", 1},
    {Family::weibull, "weibull", "weibull:theta,lambda", 2},
    {Family::gamma, "gamma", "gamma:theta,lambda", 2},
    {Family::normal, "normal", "normal:mu,sigma", 2},
    {Family::power, "power", "power:k", 1},
}};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

bool Support::bounded_below() const noexcept { return std::isfinite(lower); }
bool Support::bounded_above() const noexcept { return std::isfinite(upper); }

std::span<const FamilyInfo> family_catalog() noexcept { return kFamilies; }

Distribution::Distribution(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
    if (family_ == Family::gamma) {
        log_norm_ = params_[0] * std::log(params_[1]) - boost::math::lgamma(params_[0]);
    }
}

Distribution Distribution::uniform(double a, double b) {
    require(std::isfinite(a) && std::isfinite(b) && a < b, "uniform requires finite a < b");
    return {Family::uniform, {a, b}};
}

Distribution Distribution::exponential(double rate) {
    require(positive_finite(rate), "exponential requires rate mu > 0");
    return {Family::exponential, {rate}};
}

Distribution Distribution::weibull(double shape, double rate) {
    require(positive_finite(shape) && positive_finite(rate), "weibull requires theta > 0, lambda > 0");
    return {Family::weibull, {shape, rate}};
}

Distribution Distribution::gamma(double shape, double rate) {
    require(positive_finite(shape) && positive_finite(rate), "gamma requires theta > 0, lambda > 0");
    return {Family::gamma, {shape, rate}};
}

Distribution Distribution::normal(double mean, double sd) {
    require(std::isfinite(mean) && positive_finite(sd), "normal requires finite mu and sigma > 0");
    return {Family::normal, {mean, sd}};
}

Distribution Distribution::power(double exponent) {
    require(positive_finite(exponent), "power requires k > 0");
    return {Family::power, {exponent}};
}

Distribution Distribution::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("distribution must look like family:params, got '" +
                                    std::string(text) + "'");
    }
    const auto id = text.substr(0, colon);
    const auto params = parse_real_list(text.substr(colon + 1));
    for (const auto& info : kFamilies) {
        if (info.id != id) continue;
        if (params.size() != info.arity) {
            throw std::invalid_argument("expected " + std::string(info.signature));
        }
        switch (info.family) {
            case Family::uniform: return uniform(params[0], params[1]);
            case Family::exponential: return exponential(params[0]);
            case Family::weibull: return weibull(params[0], params[1]);
            case Family::gamma: return gamma(params[0], params[1]);
            case Family::normal: return normal(params[0], params[1]);
            case Family::power: return power(params[0]);
        }
    }
    throw std::invalid_argument("unknown distribution family '" + std::string(id) + "'");
}

std::string_view Distribution::family_id() const noexcept {
    for (const auto& info : kFamilies) {
        if (info.family == family_) return info.id;
    }
    return "?";
}

std::string Distribution::to_string() const {
    std::string out(family_id());
    out += ':';
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ',';
        out += shortest_repr(params_[i]);
    }
    return out;
}

Support Distribution::support() const noexcept {
    switch (family_) {
        case Family::uniform: return {params_[0], params_[1]};
        case Family::exponential:
        case Family::weibull:
        case Family::gamma: return {0.0, kInf};
        case Family::normal: return {-kInf, kInf};
        case Family::power: return {0.0, 1.0};
    }
    return {-kInf, kInf};
}

bool Distribution::pdf_unbounded_at_lower() const noexcept {
    switch (family_) {
        case Family::weibull:
        case Family::gamma:
        case Family::power: return params_[0] < 1.0;
        default: return false;
    }
}

double Distribution::pdf(double y) const noexcept {
    if (std::isnan(y)) return kNaN;
    switch (family_) {
        case Family::uniform: {
            const double a = params_[0], b = params_[1];
            return (y < a || y > b) ? 0.0 : 1.0 / (b - a);
        }
        case Family::exponential: {
            const double mu = params_[0];
            return y < 0.0 ? 0.0 : mu * std::exp(-mu * y);
        }
        case Family::weibull: {
            const double theta = params_[0], lambda = params_[1];
            if (y < 0.0) return 0.0;
            if (y == 0.0) return theta < 1.0 ? kInf : (theta == 1.0 ? lambda : 0.0);
            const double t = std::pow(lambda * y, theta);
            if (!std::isfinite(t)) return 0.0;
            return theta * lambda * std::pow(lambda * y, theta - 1.0) * std::exp(-t);
        }
        case Family::gamma: {
            const double theta = params_[0], lambda = params_[1];
            if (y < 0.0) return 0.0;
            if (y == 0.0) return theta < 1.0 ? kInf : (theta == 1.0 ? lambda : 0.0);
            if (std::isinf(y)) return 0.0;
            return std::exp(log_norm_ + (theta - 1.0) * std::log(y) - lambda * y);
        }
        case Family::normal: {
            const double z = (y - params_[0]) / params_[1];
            return kInvSqrt2Pi / params_[1] * std::exp(-0.5 * z * z);
        }
        case Family::power: {
            const double k = params_[0];
            if (y < 0.0 || y > 1.0) return 0.0;
            if (y == 0.0) return k < 1.0 ? kInf : (k == 1.0 ? 1.0 : 0.0);
            return k * std::pow(y, k - 1.0);
        }
    }
    return kNaN;
}

double Distribution::cdf(double y) const noexcept {
    if (std::isnan(y)) return kNaN;
    switch (family_) {
        case Family::uniform: {
            const double a = params_[0], b = params_[1];
            if (y <= a) return 0.0;
            if (y >= b) return 1.0;
            return (y - a) / (b - a);
        }
        case Family::exponential:
            return y <= 0.0 ? 0.0 : -std::expm1(-params_[0] * y);
        case Family::weibull:
            return y <= 0.0 ? 0.0 : -std::expm1(-std::pow(params_[1] * y, params_[0]));
        case Family::gamma:
            if (y <= 0.0) return 0.0;
            if (std::isinf(y)) return 1.0;
            return boost::math::gamma_p(params_[0], params_[1] * y);
        case Family::normal:
            return 0.5 * std::erfc(-(y - params_[0]) / params_[1] * kInvSqrt2);
        case Family::power:
            if (y <= 0.0) return 0.0;
            if (y >= 1.0) return 1.0;
            return std::pow(y, params_[0]);
    }
    return kNaN;
}

double Distribution::sf(double y) const noexcept {
    if (std::isnan(y)) return kNaN;
    switch (family_) {
        case Family::exponential:
            return y <= 0.0 ? 1.0 : std::exp(-params_[0] * y);
        case Family::weibull:
            return y <= 0.0 ? 1.0 : std::exp(-std::pow(params_[1] * y, params_[0]));
        case Family::gamma:
            if (y <= 0.0) return 1.0;
            if (std::isinf(y)) return 0.0;
            return boost::math::gamma_q(params_[0], params_[1] * y);
        case Family::normal:
            return 0.5 * std::erfc((y - params_[0]) / params_[1] * kInvSqrt2);
        case Family::uniform: {
            const double a = params_[0], b = params_[1];
            if (y <= a) return 1.0;
            if (y >= b) return 0.0;
            return (b - y) / (b - a);
        }
        case Family::power:
            if (y <= 0.0) return 1.0;
            if (y >= 1.0) return 0.0;
            return -std::expm1(params_[0] * std::log(y));
    }
    return kNaN;
}

std::optional<double> Distribution::pdf_derivative(double y) const noexcept {
    const Support s = support();
    if (y == s.lower || y == s.upper) return std::nullopt;
    if (y < s.lower || y > s.upper) return 0.0;
    switch (family_) {
        case Family::uniform: return 0.0;
        case Family::exponential: return -params_[0] * pdf(y);
        case Family::weibull: {
            const double theta = params_[0], lambda = params_[1];
            return pdf(y) * ((theta - 1.0) / y - theta * lambda * std::pow(lambda * y, theta - 1.0));
        }
        case Family::gamma: return pdf(y) * ((params_[0] - 1.0) / y - params_[1]);
        case Family::normal: {
            const double z = (y - params_[0]) / params_[1];
            return -z / params_[1] * pdf(y);
        }
        case Family::power: {
            const double k = params_[0];
            return k * (k - 1.0) * std::pow(y, k - 2.0);
        }
    }
    return std::nullopt;
}

double Distribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile requires 0 < p < 1");
    switch (family_) {
        case Family::uniform: return params_[0] + p * (params_[1] - params_[0]);
        case Family::exponential: return -std::log1p(-p) / params_[0];
        case Family::weibull: return std::pow(-std::log1p(-p), 1.0 / params_[0]) / params_[1];
        case Family::power: return std::pow(p, 1.0 / params_[0]);
        case Family::gamma:
        case Family::normal: return p <= 0.5 ? bisect_cdf(p) : bisect_sf(1.0 - p);
    }
    return kNaN;
}

double Distribution::inverse_survival(double q) const {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("inverse_survival requires 0 < q < 1");
    switch (family_) {
        case Family::uniform: return params_[1] - q * (params_[1] - params_[0]);
        case Family::exponential: return -std::log(q) / params_[0];
        case Family::weibull: return std::pow(-std::log(q), 1.0 / params_[0]) / params_[1];
        case Family::power: return std::exp(std::log1p(-q) / params_[0]);
        case Family::gamma:
        case Family::normal: return q <= 0.5 ? bisect_sf(q) : bisect_cdf(1.0 - q);
    }
    return kNaN;
}

namespace {

// Bisection on a monotone function until the bracket cannot shrink further.
template <typename Below>
double bisect(double lo, double hi, Below below) {
    for (int i = 0; i < 2000; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (below(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

// Brackets for the families without a closed-form inverse (gamma, normal).
double Distribution::bisect_cdf(double p) const {
    const Support s = support();
    double lo = s.bounded_below() ? s.lower : params_[0] - params_[1];
    double hi = s.bounded_below() ? params_[0] / params_[1] + 1.0 : params_[0] + params_[1];
    for (double step = 1.0; !s.bounded_below() && cdf(lo) > p; step *= 2.0) lo -= step * params_[1];
    for (double step = 1.0; cdf(hi) < p; step *= 2.0) hi += step * (s.bounded_below() ? hi : params_[1]);
    return bisect(lo, hi, [&](double y) { return cdf(y) < p; });
}

double Distribution::bisect_sf(double q) const {
    const Support s = support();
    double lo = s.bounded_below() ? s.lower : params_[0] - params_[1];
    double hi = s.bounded_below() ? params_[0] / params_[1] + 1.0 : params_[0] + params_[1];
    for (double step = 1.0; !s.bounded_below() && sf(lo) < q; step *= 2.0) lo -= step * params_[1];
    for (double step = 1.0; sf(hi) > q; step *= 2.0) hi += step * (s.bounded_below() ? hi : params_[1]);
    return bisect(lo, hi, [&](double y) { return sf(y) > q; });
}

DiscretePmf::DiscretePmf(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) throw std::invalid_argument("pmf needs at least one probability");
    for (double p : p_) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pmf entries must lie in [0,1]");
    }
    const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("pmf must sum to 1");
}

DiscretePmf DiscretePmf::parse(std::string_view text) {
    // Entries may be written as fractions, e.g. "1/3,1/3,1/3".
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto slash = token.find('/');
        if (slash == std::string_view::npos) {
            values.push_back(parse_real(token));
        } else {
            values.push_back(parse_real(token.substr(0, slash)) / parse_real(token.substr(slash + 1)));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return DiscretePmf(std::move(values));
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace xtropy

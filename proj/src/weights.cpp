#include "xtropy/weights.hpp"

#include "xtropy/numeric_text.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xtropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<WeightInfo, 5> kWeights{{
    {WeightKind::constant_one, "one", "w(y) = 1"},
    {WeightKind::identity, "y", "w(y) = y"},
    {WeightKind::inverse, "inv_y", "w(y) = 1/y"},
    {WeightKind::exp_decay, "exp:alpha", "w(y) = exp(-alpha y)"},
    {WeightKind::reciprocal_shift, "recip1p", "w(y) = 1/(1+y)"},
}};

}  // namespace

std::string_view to_string(Monotone m) noexcept {
    switch (m) {
        case Monotone::increasing: return "increasing";
        case Monotone::decreasing: return "decreasing";
        case Monotone::constant: return "constant";
    }
    return "?";
}

std::span<const WeightInfo> weight_catalog() noexcept { return kWeights; }

WeightSpec WeightSpec::one() { return {WeightKind::constant_one, 0.0}; }
WeightSpec WeightSpec::identity() { return {WeightKind::identity, 0.0}; }
WeightSpec WeightSpec::inverse() { return {WeightKind::inverse, 0.0}; }
WeightSpec WeightSpec::reciprocal_shift() { return {WeightKind::reciprocal_shift, 0.0}; }

WeightSpec WeightSpec::exp_decay(double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("exp weight needs a finite alpha");
    return {WeightKind::exp_decay, alpha};
}

WeightSpec WeightSpec::parse(std::string_view text) {
    if (text == "one") return one();
    if (text == "y") return identity();
    if (text == "inv_y") return inverse();
    if (text == "recip1p") return reciprocal_shift();
    if (text.starts_with("exp:")) return exp_decay(parse_real(text.substr(4)));
    throw std::invalid_argument("unknown weight '" + std::string(text) +
                                "' (expected one, y, inv_y, exp:alpha, recip1p)");
}

double WeightSpec::operator()(double y) const noexcept {
    switch (kind_) {
        case WeightKind::constant_one: return 1.0;
        case WeightKind::identity: return y;
        case WeightKind::inverse: return 1.0 / y;
        case WeightKind::exp_decay: return std::exp(-alpha_ * y);
        case WeightKind::reciprocal_shift: return 1.0 / (1.0 + y);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

Support WeightSpec::nonnegative_on() const noexcept {
    switch (kind_) {
        case WeightKind::identity:
        case WeightKind::inverse: return {0.0, kInf};
        case WeightKind::reciprocal_shift: return {-1.0, kInf};
        default: return {-kInf, kInf};
    }
}

Monotone WeightSpec::monotone() const noexcept {
    switch (kind_) {
        case WeightKind::constant_one: return Monotone::constant;
        case WeightKind::identity: return Monotone::increasing;
        case WeightKind::inverse:
        case WeightKind::reciprocal_shift: return Monotone::decreasing;
        case WeightKind::exp_decay:
            return alpha_ > 0 ? Monotone::decreasing : (alpha_ < 0 ? Monotone::increasing : Monotone::constant);
    }
    return Monotone::constant;
}

std::vector<double> WeightSpec::singular_points() const {
    switch (kind_) {
        case WeightKind::inverse: return {0.0};
        case WeightKind::reciprocal_shift: return {-1.0};
        default: return {};
    }
}

std::string WeightSpec::to_string() const {
    switch (kind_) {
        case WeightKind::constant_one: return "one";
        case WeightKind::identity: return "y";
        case WeightKind::inverse: return "inv_y";
        case WeightKind::exp_decay: return "exp:" + shortest_repr(alpha_);
        case WeightKind::reciprocal_shift: return "recip1p";
    }
    return "?";
}

}  // namespace xtropy

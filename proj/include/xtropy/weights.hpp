#pragma once

#include "xtropy/distributions.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtropy {

enum class WeightKind { constant_one, identity, inverse, exp_decay, reciprocal_shift };

enum class Monotone { increasing, decreasing, constant };

std::string_view to_string(Monotone m) noexcept;

struct WeightInfo {
    WeightKind kind;
    std::string_view id;  // CLI token; exp_decay is written "exp:alpha"
    std::string_view formula;
};

std::span<const WeightInfo> weight_catalog() noexcept;

/// A nonnegative weight function w(y) together with the facts the measures
/// need about it: where it is nonnegative, its monotonicity and its poles.
class WeightSpec {
public:
    static WeightSpec one();
    static WeightSpec identity();
    static WeightSpec inverse();
    static WeightSpec exp_decay(double alpha);
    static WeightSpec reciprocal_shift();

    /// Parses `one`, `y`, `inv_y`, `exp:alpha`, `recip1p`.
    static WeightSpec parse(std::string_view text);

    [[nodiscard]] double operator()(double y) const noexcept;

    [[nodiscard]] WeightKind kind() const noexcept { return kind_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] Support nonnegative_on() const noexcept;
    [[nodiscard]] Monotone monotone() const noexcept;
    [[nodiscard]] std::vector<double> singular_points() const;
    /// CLI form, e.g. "exp:1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

private:
    WeightSpec(WeightKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    WeightKind kind_;
    double alpha_ = 0.0;
};

}  // namespace xtropy

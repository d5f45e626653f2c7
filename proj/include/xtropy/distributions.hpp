#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtropy {

/// Closed interval [lower, upper] of the extended real line. Either bound may
/// be infinite.
struct Support {
    double lower;
    double upper;

    [[nodiscard]] bool contains(double y) const noexcept { return y >= lower && y <= upper; }
    [[nodiscard]] bool bounded_below() const noexcept;
    [[nodiscard]] bool bounded_above() const noexcept;
};

enum class Family { uniform, exponential, weibull, gamma, normal, power };

struct FamilyInfo {
    Family family;
    std::string_view id;         // CLI token, e.g. "weibull"
    std::string_view signature;  // e.g. "weibull:theta,lambda"
    std::size_t arity;
};

/// Every family the parser accepts, in listing order.
std::span<const FamilyInfo> family_catalog() noexcept;

/// An immutable parametric continuous distribution.
///
/// Parameterizations:
///   uniform(a, b)            density 1/(b-a) on [a, b]
///   exponential(mu)          density mu e^{-mu y}, y >= 0
///   weibull(theta, lambda)   density theta lambda^theta y^{theta-1} e^{-(lambda y)^theta}
///                            (lambda is a rate, scale = 1/lambda)
///   gamma(theta, lambda)     density lambda^theta / Gamma(theta) y^{theta-1} e^{-lambda y}
///   normal(mean, sd)
///   power(k)                 density k y^{k-1} on (0, 1)
///
/// Construction validates parameters and throws std::invalid_argument.
class Distribution {
public:
    static Distribution uniform(double a, double b);
    static Distribution exponential(double rate);
    static Distribution weibull(double shape, double rate);
    static Distribution gamma(double shape, double rate);
    static Distribution normal(double mean, double sd);
    static Distribution power(double exponent);

    /// Parses `uniform:a,b`, `exp:mu`, `weibull:theta,lambda`, `gamma:theta,lambda`,
    /// `normal:mu,sigma`, `power:k`.
    static Distribution parse(std::string_view text);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] const std::vector<double>& parameters() const noexcept { return params_; }
    [[nodiscard]] Support support() const noexcept;
    /// Canonical CLI form, e.g. "weibull:2,1".
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string_view family_id() const noexcept;

    [[nodiscard]] double pdf(double y) const noexcept;
    [[nodiscard]] double cdf(double y) const noexcept;
    /// 1 - cdf(y), computed without cancellation in the upper tail.
    [[nodiscard]] double sf(double y) const noexcept;

    /// Analytic g'(y). Empty at kink points of the density (support endpoints
    /// where the density is discontinuous or not differentiable).
    [[nodiscard]] std::optional<double> pdf_derivative(double y) const noexcept;

    /// y with cdf(y) = p. Throws std::domain_error unless 0 < p < 1.
    [[nodiscard]] double quantile(double p) const;
    /// y with sf(y) = q. Throws std::domain_error unless 0 < q < 1.
    [[nodiscard]] double inverse_survival(double q) const;

    /// True when the density grows without bound at the lower support end.
    [[nodiscard]] bool pdf_unbounded_at_lower() const noexcept;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    Distribution(Family family, std::vector<double> params);

    double bisect_cdf(double p) const;
    double bisect_sf(double q) const;

    Family family_;
    std::vector<double> params_;
    double log_norm_ = 0.0;  // gamma: theta log(lambda) - lgamma(theta)
};

/// Finite probability mass function p_1..p_N.
class DiscretePmf {
public:
    /// Throws std::invalid_argument unless every p_i is in [0,1] and the
    /// probabilities sum to one within 1e-12.
    explicit DiscretePmf(std::vector<double> probabilities);

    /// Comma-separated probabilities, e.g. "0.5,0.5".
    static DiscretePmf parse(std::string_view text);

    [[nodiscard]] std::span<const double> probabilities() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }

private:
    std::vector<double> p_;
};

/// Parses a comma-separated list of reals. Throws std::invalid_argument.
std::vector<double> parse_real_list(std::string_view text);

}  // namespace xtropy

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace xtropy {

/// Tolerance policy shared by every integral in the library.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    /// Probability mass dropped from each infinite tail.
    double tail_mass = 1e-12;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;

    /// Defaults, with `tail_mass` taken from XTROPY_TAIL_MASS when set.
    static QuadratureConfig from_environment();

    /// Absolute tolerance the result must meet for `value`.
    [[nodiscard]] double target(double value) const noexcept;
};

enum class IntegralStatus { converged, max_subdivisions_reached, divergence_suspected };

std::string_view to_string(IntegralStatus status) noexcept;

struct IntegralResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int subdivisions_used = 0;
    IntegralStatus status = IntegralStatus::converged;

    [[nodiscard]] bool converged() const noexcept { return status == IntegralStatus::converged; }
};

/// Optional knowledge the caller has about the integration endpoints.
struct EndpointHints {
    /// Finite stand-ins for infinite endpoints (typically quantiles at the tail mass).
    std::optional<double> lower_truncation;
    std::optional<double> upper_truncation;
    /// The integrand may blow up at this endpoint. The integrator then peels
    /// off geometrically shrinking panels toward the endpoint and watches
    /// their contributions for a divergent trend.
    bool singular_lower = false;
    bool singular_upper = false;
};

/// Thrown when the integrand returns a non-finite value inside (a, b).
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod integration of f over (a, b).
///
/// Infinite endpoints must come with a truncation point in `hints`; a < b is
/// required after truncation. Throws std::invalid_argument on bad bounds or
/// config and QuadratureError on a non-finite interior evaluation.
IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {},
                         const EndpointHints& hints = {});

/// (f(y+h) - f(y-h)) / 2h. Throws std::invalid_argument unless h > 0.
double central_difference(const Integrand& f, double y, double h);

/// eps^{1/3} max(1, |y|), the usual truncation/rounding balance for a
/// central difference.
double default_difference_step(double y) noexcept;

}  // namespace xtropy

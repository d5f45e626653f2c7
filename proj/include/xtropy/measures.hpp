#pragma once

#include "xtropy/distributions.hpp"
#include "xtropy/quadrature.hpp"
#include "xtropy/weights.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace xtropy {

/// The conditioning event S = {c < Y < d}.
struct IntervalCondition {
    double c;
    double d;

    /// Throws std::invalid_argument unless c < d (either may be infinite).
    IntervalCondition(double lower, double upper);
};

enum class MeasureStatus { finite, divergent, undefined };

std::string_view to_string(MeasureStatus status) noexcept;

struct MeasureValue {
    double value = 0.0;  // meaningful only when status == finite
    double err_estimate = 0.0;
    MeasureStatus status = MeasureStatus::finite;
    std::string diagnostic;

    static MeasureValue finite(double value, double err) { return {value, err, MeasureStatus::finite, {}}; }
    static MeasureValue divergent(std::string why);
    static MeasureValue undefined(std::string why);

    [[nodiscard]] bool is_finite() const noexcept { return status == MeasureStatus::finite; }
};

/// Order theta and type lambda of the generalized entropies.
struct MeasureParams {
    double theta = 2.0;
    double lambda = 3.0;
};

/// Density of Y restricted to S = (c, d) and renormalized, along with the
/// finite integration window the measures use for it.
///
/// S is first intersected with the support. Infinite window ends are replaced
/// by the quantiles at the configured tail mass, and ends reaching past those
/// quantiles are clipped to them, so an S covering the whole support yields
/// exactly the unconditional integration problem.
class ConditionedDensity {
public:
    /// Empty when S carries no probability mass.
    static std::optional<ConditionedDensity> make(const Distribution& dist,
                                                  const std::optional<IntervalCondition>& S,
                                                  const QuadratureConfig& cfg = {});

    [[nodiscard]] double pdf(double y) const noexcept;
    [[nodiscard]] double cdf(double y) const noexcept;

    [[nodiscard]] const Distribution& distribution() const noexcept { return dist_; }
    /// S intersected with the support (may be infinite).
    [[nodiscard]] double lower() const noexcept { return lo_; }
    [[nodiscard]] double upper() const noexcept { return hi_; }
    /// Finite bounds used for quadrature.
    [[nodiscard]] double integration_lower() const noexcept { return int_lo_; }
    [[nodiscard]] double integration_upper() const noexcept { return int_hi_; }
    [[nodiscard]] double mass() const noexcept { return mass_; }
    /// Integration starts at a pole of the density.
    [[nodiscard]] bool singular_lower() const noexcept;

private:
    ConditionedDensity(Distribution dist) : dist_(std::move(dist)) {}

    Distribution dist_;
    double lo_ = 0.0, hi_ = 0.0;
    double int_lo_ = 0.0, int_hi_ = 0.0;
    double mass_ = 0.0;
    bool upper_half_ = false;  // lo_ lies past the median; use sf differences
};

/// y -> g(y) / (G(d) - G(c)) on (c, d), 0 elsewhere. Throws std::domain_error
/// when S has zero mass.
Integrand conditional_density(const Distribution& dist, const IntervalCondition& S);

using OptCondition = std::optional<IntervalCondition>;

MeasureValue shannon_entropy(const Distribution& dist, const OptCondition& S = {},
                             const QuadratureConfig& cfg = {});
MeasureValue renyi_entropy(const Distribution& dist, double theta, const OptCondition& S = {},
                           const QuadratureConfig& cfg = {});
MeasureValue tsallis_entropy(const Distribution& dist, double theta, const OptCondition& S = {},
                             const QuadratureConfig& cfg = {});
MeasureValue kapur_entropy(const Distribution& dist, double theta, double lambda,
                           const OptCondition& S = {}, const QuadratureConfig& cfg = {});
MeasureValue varma_entropy(const Distribution& dist, double theta, double lambda,
                           const OptCondition& S = {}, const QuadratureConfig& cfg = {});
MeasureValue cumulative_past_entropy(const Distribution& dist, const OptCondition& S = {},
                                     const QuadratureConfig& cfg = {});
MeasureValue extropy(const Distribution& dist, const OptCondition& S = {}, const QuadratureConfig& cfg = {});
MeasureValue weighted_extropy(const Distribution& dist, const WeightSpec& w, const OptCondition& S = {},
                              const QuadratureConfig& cfg = {});

/// -sum p log p with 0 log 0 = 0.
double discrete_entropy(const DiscretePmf& pmf);
/// -sum (1-p) log(1-p). For two-point pmfs this is the same expression as
/// discrete_entropy.
double discrete_extropy(const DiscretePmf& pmf);

enum class MeasureKind { shannon, renyi, tsallis, kapur, varma, cpe, extropy, wextropy };

struct MeasureInfo {
    MeasureKind kind;
    std::string_view id;
    std::string_view uses;  // which of theta / lambda / weight the measure reads
};

std::span<const MeasureInfo> measure_catalog() noexcept;
MeasureKind parse_measure(std::string_view id);
std::string_view to_string(MeasureKind kind) noexcept;

/// Dispatches to the measure named by `kind`; parameters a measure does not use
/// are ignored.
MeasureValue evaluate_measure(MeasureKind kind, const Distribution& dist, const MeasureParams& params,
                              const WeightSpec& w, const OptCondition& S, const QuadratureConfig& cfg);

}  // namespace xtropy

#pragma once

#include "xtropy/distributions.hpp"
#include "xtropy/measures.hpp"
#include "xtropy/quadrature.hpp"
#include "xtropy/weights.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace xtropy {

/// How h(v; c, d), the density of V = |Y1 - Y2| given c < Y1, Y2 < d, is scaled.
///
/// `paper_literal` is the single-ordering integral
///     int_{c+v}^{d} g(y - v) g(y) dy / (G(d) - G(c))^2,
/// which carries only the Y2 > Y1 half of the mass and integrates to 1/2.
/// `normalized` doubles it into a proper density on [0, d - c].
enum class DiffConvention { normalized, paper_literal };

std::string_view to_string(DiffConvention c) noexcept;
DiffConvention parse_convention(std::string_view text);

/// Y1, Y2 i.i.d. from `dist`, both conditioned on S.
class DiffDensityContext {
public:
    /// Empty when S carries no probability mass.
    static std::optional<DiffDensityContext> make(const Distribution& dist, const IntervalCondition& S,
                                                  DiffConvention convention = DiffConvention::normalized,
                                                  const QuadratureConfig& cfg = {});

    [[nodiscard]] const ConditionedDensity& conditioned() const noexcept { return cd_; }
    [[nodiscard]] DiffConvention convention() const noexcept { return convention_; }
    [[nodiscard]] const QuadratureConfig& config() const noexcept { return cfg_; }
    /// Length of the effective window; V takes values in [0, range()].
    [[nodiscard]] double range() const noexcept;

    /// h(v) in this context's convention, with its quadrature error. Zero
    /// outside [0, range()).
    [[nodiscard]] IntegralResult density(double v) const;

private:
    DiffDensityContext(ConditionedDensity cd, DiffConvention conv, const QuadratureConfig& cfg)
        : cd_(std::move(cd)), convention_(conv), cfg_(cfg) {}

    ConditionedDensity cd_;
    DiffConvention convention_;
    QuadratureConfig cfg_;
};

/// h(v; c, d) in the context's convention.
double diff_density(const DiffDensityContext& ctx, double v);

/// E(phi(V) | S) = int_0^{d-c} phi(v) h(v) dv with the normalized density,
/// whatever the context's convention.
MeasureValue conditional_expectation(const DiffDensityContext& ctx, const Integrand& phi);

/// J^w(V | S) = -1/2 int_0^{d-c} w(v) h(v)^2 dv, with h in the context's
/// convention. Divergent when w has a pole in [0, d-c] where h is positive.
MeasureValue weighted_extropy_of_diff(const DiffDensityContext& ctx, const WeightSpec& w);

/// Named test functions phi(v) for conditional expectations.
struct PhiInfo {
    std::string_view id;
    std::string_view formula;
    bool nondecreasing;
};

std::span<const PhiInfo> phi_catalog() noexcept;
/// `one`, `v`, `v2`, `exp_neg` (e^{-v}). Throws std::invalid_argument.
Integrand parse_phi(std::string_view id);

}  // namespace xtropy

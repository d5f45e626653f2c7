#pragma once

#include "xtropy/convolution.hpp"
#include "xtropy/distributions.hpp"
#include "xtropy/measures.hpp"
#include "xtropy/quadrature.hpp"
#include "xtropy/weights.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtropy {

// ---------------------------------------------------------------------------
// Log-shape classification
// ---------------------------------------------------------------------------

enum class LogShape { log_concave, log_convex, log_linear, indeterminate };

std::string_view to_string(LogShape s) noexcept;

struct LogShapeReport {
    LogShape classification = LogShape::indeterminate;
    std::vector<double> grid;
    double min_second_difference = 0.0;
    double max_second_difference = 0.0;
    /// Absolute band the second differences were compared against.
    double tolerance_band = 0.0;
    std::string diagnostic;

    /// log-concave or log-linear
    [[nodiscard]] bool at_least_log_concave() const noexcept;
};

/// Classifies log f from its second differences on n interior points of
/// (lo, hi), spaced uniformly and excluding the endpoints.
///
/// `relative_band` is scaled by the magnitude of the log values entering each
/// difference, so the absolute band tracks rounding in log f:
///     band = relative_band * max_i (|l_{i-1}| + 2|l_i| + |l_{i+1}|).
/// All differences <= +band: log_concave; all >= -band: log_convex; both:
/// log_linear. A nonpositive or non-finite f(x) gives indeterminate.
LogShapeReport classify_log_shape(const Integrand& f, double lo, double hi, int n = 101,
                                  double relative_band = 1e-7);

// ---------------------------------------------------------------------------
// Monotonicity reports
// ---------------------------------------------------------------------------

enum class Claim { theorem1, theorem2, lemma_a, lemma_b };
enum class Axis { c, d, v };
enum class Direction { nondecreasing, nonincreasing, report_only };
enum class Verdict { pass, fail, inconclusive, not_asserted };
/// Empirical sign pattern of successive differences (within slack).
enum class Trend { constant, nondecreasing, nonincreasing, mixed, none };

std::string_view to_string(Claim c) noexcept;
std::string_view to_string(Axis a) noexcept;
std::string_view to_string(Direction d) noexcept;
std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Trend t) noexcept;

struct Cell {
    double c = 0.0;
    double d = 0.0;
    std::optional<double> v;  // lemma_b sweeps only
    MeasureValue value;
    /// Theorem-1 sweeps: 2 int_c^d g^2 - g(d) (G(d) - G(c)); its sign is the
    /// sign of dJ(Y|S)/dd.
    std::optional<double> psi;
};

struct Violation {
    std::size_t index;  // cell index of the later point of the offending pair
    double magnitude;
};

/// One monotonicity claim checked along a family of lines through the cells.
struct SweepCheck {
    Axis along = Axis::d;
    Direction expected = Direction::report_only;
    /// Cell indices of each line, in increasing order of the varying coordinate.
    std::vector<std::vector<std::size_t>> lines;
    std::vector<Violation> violations;
    /// Largest slack applied to any adjacent comparison.
    double slack = 0.0;
    Verdict verdict = Verdict::not_asserted;
    Trend observed = Trend::none;
};

struct MonotonicityReport {
    Claim claim = Claim::theorem1;
    Distribution dist = Distribution::uniform(0, 1);
    std::optional<WeightSpec> weight;
    std::string phi;
    DiffConvention convention = DiffConvention::normalized;
    QuadratureConfig cfg;

    std::vector<double> c_grid;
    std::vector<double> d_grid;
    std::vector<double> v_grid;
    std::vector<Cell> cells;

    /// Shape of the function the claim's hypothesis is about (cdf for
    /// theorem 1, pdf otherwise) and whether the remaining hypotheses hold.
    std::string hypothesis_subject;
    LogShapeReport hypothesis;
    bool hypotheses_hold = false;

    /// One check for theorem1 / lemma_b; along-d then along-c for theorem2 / lemma_a.
    std::vector<SweepCheck> checks;
    std::vector<std::size_t> nonfinite_cells;
    Verdict verdict = Verdict::not_asserted;

    [[nodiscard]] const SweepCheck& along_d() const;
    [[nodiscard]] const SweepCheck& along_c() const;
};

/// Slack for comparing two adjacent sweep values with the given error estimates.
double comparison_slack(double err_a, double err_b) noexcept;

/// Evaluates a check's lines against its expected direction and fills in
/// violations, slack, observed trend and verdict.
void assess(SweepCheck& check, std::span<const Cell> cells);

/// Re-runs assess on every check and recomputes nonfinite_cells and the
/// overall verdict; used after changing a check's expected direction.
void reassess(MonotonicityReport& report);

/// Direction asserted for theorem1 given the log shape of G: nondecreasing for
/// log_concave, report_only for everything else (log_linear included).
Direction theorem1_direction(LogShape cdf_shape) noexcept;

/// J(Y | c < Y < d_i) across d_grid (strictly increasing, every d_i > c).
/// Expected direction comes from the log shape of G on (c, max d): only the
/// log-concave case is asserted (nondecreasing); anything else is report_only.
MonotonicityReport verify_theorem1(const Distribution& dist, double c, std::span<const double> d_grid,
                                   const QuadratureConfig& cfg = {});

/// J^w(V | S) over the c_grid x d_grid matrix (max c < min d). Asserts
/// nondecreasing in d and nonincreasing in c when the pdf is log-concave on
/// the hull and w is nonincreasing; report_only otherwise.
MonotonicityReport verify_theorem2(const Distribution& dist, const WeightSpec& w, std::span<const double> c_grid,
                                   std::span<const double> d_grid, const QuadratureConfig& cfg = {},
                                   DiffConvention convention = DiffConvention::normalized);

/// E(phi(V) | S) over the c_grid x d_grid matrix. phi is spot-checked for
/// monotonicity on [0, max d - min c]; a decreasing phi throws
/// std::invalid_argument.
MonotonicityReport verify_lemma_a(const Distribution& dist, const Integrand& phi, std::string_view phi_name,
                                  std::span<const double> c_grid, std::span<const double> d_grid,
                                  const QuadratureConfig& cfg = {});

/// h(v; c, d) across v_grid for fixed S; asserts nonincreasing when the pdf is
/// log-concave on S.
MonotonicityReport verify_lemma_b(const Distribution& dist, const IntervalCondition& S,
                                  std::span<const double> v_grid, const QuadratureConfig& cfg = {},
                                  DiffConvention convention = DiffConvention::normalized);

// ---------------------------------------------------------------------------
// Monte Carlo oracle
// ---------------------------------------------------------------------------

struct MonteCarloEstimate {
    double estimate;
    double stderr_;
    std::uint64_t attempts;
};

/// Estimates E(phi(|Y1 - Y2|) | c < Y1, Y2 < d) by drawing i.i.d. pairs from
/// the unconditioned distribution and keeping those with both draws inside S.
/// Deterministic for a given seed. Throws std::invalid_argument for n < 1e4
/// and std::runtime_error when the acceptance rate falls below 1e-4.
MonteCarloEstimate mc_oracle(const Distribution& dist, const IntervalCondition& S, const Integrand& phi,
                             std::uint64_t n, std::uint64_t seed);

/// n evenly spaced points from lo to hi inclusive (n = 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace xtropy

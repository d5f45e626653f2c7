#include "xtropy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace xtropy {

namespace {

constexpr double kSlackFloor = 1e-9;
constexpr double kSlackErrFactor = 10.0;
constexpr int kShapeGridPoints = 101;

void require_increasing(std::span<const double> grid, const char* name) {
    if (grid.empty()) throw std::invalid_argument(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw std::invalid_argument(std::string(name) + " grid has a non-finite point");
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string(name) + " grid must be strictly increasing");
        }
    }
}

// Log shape of the pdf or cdf on (lo, hi) clipped to the support.
LogShapeReport shape_on(const Distribution& dist, bool use_cdf, double lo, double hi) {
    const Support s = dist.support();
    lo = std::max(lo, s.lower);
    hi = std::min(hi, s.upper);
    if (!(lo < hi)) {
        LogShapeReport r;
        r.diagnostic = "hypothesis interval does not meet the support";
        return r;
    }
    if (use_cdf) return classify_log_shape([&](double y) { return dist.cdf(y); }, lo, hi, kShapeGridPoints);
    return classify_log_shape([&](double y) { return dist.pdf(y); }, lo, hi, kShapeGridPoints);
}

// 2 int_c^d g^2 - g(d) (G(d) - G(c)) from the unconditioned density.
std::optional<double> theorem1_psi(const Distribution& dist, double c, double d, const QuadratureConfig& cfg) {
    const Support s = dist.support();
    const double lo = std::max(c, s.lower);
    const double hi = std::min(d, s.upper);
    if (!(lo < hi)) return std::nullopt;
    EndpointHints hints;
    hints.singular_lower = lo == s.lower && dist.pdf_unbounded_at_lower();
    try {
        const auto r = integrate([&](double y) { return dist.pdf(y) * dist.pdf(y); }, lo, hi, cfg, hints);
        if (!r.converged()) return std::nullopt;
        return 2.0 * r.value - dist.pdf(d) * (dist.cdf(d) - dist.cdf(c));
    } catch (const QuadratureError&) {
        return std::nullopt;
    }
}

Verdict combine(std::span<const SweepCheck> checks) {
    bool any_inconclusive = false, any_pass = false;
    for (const auto& ch : checks) {
        if (ch.verdict == Verdict::fail) return Verdict::fail;
        any_inconclusive = any_inconclusive || ch.verdict == Verdict::inconclusive;
        any_pass = any_pass || ch.verdict == Verdict::pass;
    }
    if (any_inconclusive) return Verdict::inconclusive;
    return any_pass ? Verdict::pass : Verdict::not_asserted;
}

void finish_report(MonotonicityReport& rep) {
    for (auto& ch : rep.checks) assess(ch, rep.cells);
    rep.nonfinite_cells.clear();
    for (std::size_t i = 0; i < rep.cells.size(); ++i) {
        if (!rep.cells[i].value.is_finite()) rep.nonfinite_cells.push_back(i);
    }
    rep.verdict = combine(rep.checks);
}

// Fills the c-major cell matrix and the along-d / along-c checks.
template <typename Eval>
void fill_matrix(MonotonicityReport& rep, Direction along_d, Direction along_c, Eval&& eval) {
    const std::size_t nc = rep.c_grid.size(), nd = rep.d_grid.size();
    rep.cells.reserve(nc * nd);
    for (double c : rep.c_grid) {
        for (double d : rep.d_grid) {
            Cell cell;
            cell.c = c;
            cell.d = d;
            cell.value = eval(c, d);
            rep.cells.push_back(std::move(cell));
        }
    }
    SweepCheck by_d{Axis::d, along_d, {}, {}, 0.0, Verdict::not_asserted, Trend::none};
    for (std::size_t i = 0; i < nc; ++i) {
        auto& line = by_d.lines.emplace_back();
        for (std::size_t j = 0; j < nd; ++j) line.push_back(i * nd + j);
    }
    SweepCheck by_c{Axis::c, along_c, {}, {}, 0.0, Verdict::not_asserted, Trend::none};
    for (std::size_t j = 0; j < nd; ++j) {
        auto& line = by_c.lines.emplace_back();
        for (std::size_t i = 0; i < nc; ++i) line.push_back(i * nd + j);
    }
    rep.checks = {std::move(by_d), std::move(by_c)};
}

void require_matrix(std::span<const double> c_grid, std::span<const double> d_grid) {
    require_increasing(c_grid, "c");
    require_increasing(d_grid, "d");
    if (!(c_grid.back() < d_grid.front())) {
        throw std::invalid_argument("every c must lie below every d (max c < min d)");
    }
}

class PairSampler {
public:
    PairSampler(const Distribution& dist, std::uint64_t seed)
        : dist_(dist), rng_(make_seed(seed)) {}

    double draw() {
        const auto& p = dist_.parameters();
        switch (dist_.family()) {
            case Family::uniform: return std::uniform_real_distribution<double>(p[0], p[1])(rng_);
            case Family::exponential: return std::exponential_distribution<double>(p[0])(rng_);
            case Family::weibull: return std::weibull_distribution<double>(p[0], 1.0 / p[1])(rng_);
            case Family::gamma: return std::gamma_distribution<double>(p[0], 1.0 / p[1])(rng_);
            case Family::normal: return std::normal_distribution<double>(p[0], p[1])(rng_);
            case Family::power: return std::pow(std::uniform_real_distribution<double>(0.0, 1.0)(rng_), 1.0 / p[0]);
        }
        return std::numeric_limits<double>::quiet_NaN();
    }

private:
    static std::mt19937_64 make_seed(std::uint64_t seed) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        return std::mt19937_64(seq);
    }

    const Distribution& dist_;
    std::mt19937_64 rng_;
};

}  // namespace

std::string_view to_string(LogShape s) noexcept {
    switch (s) {
        case LogShape::log_concave: return "log_concave";
        case LogShape::log_convex: return "log_convex";
        case LogShape::log_linear: return "log_linear";
        case LogShape::indeterminate: return "indeterminate";
    }
    return "?";
}

std::string_view to_string(Claim c) noexcept {
    switch (c) {
        case Claim::theorem1: return "theorem1";
        case Claim::theorem2: return "theorem2";
        case Claim::lemma_a: return "lemma_a";
        case Claim::lemma_b: return "lemma_b";
    }
    return "?";
}

std::string_view to_string(Axis a) noexcept {
    switch (a) {
        case Axis::c: return "c";
        case Axis::d: return "d";
        case Axis::v: return "v";
    }
    return "?";
}

std::string_view to_string(Direction d) noexcept {
    switch (d) {
        case Direction::nondecreasing: return "nondecreasing";
        case Direction::nonincreasing: return "nonincreasing";
        case Direction::report_only: return "report_only";
    }
    return "?";
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::not_asserted: return "not_asserted";
    }
    return "?";
}

std::string_view to_string(Trend t) noexcept {
    switch (t) {
        case Trend::constant: return "constant";
        case Trend::nondecreasing: return "nondecreasing";
        case Trend::nonincreasing: return "nonincreasing";
        case Trend::mixed: return "mixed";
        case Trend::none: return "none";
    }
    return "?";
}

bool LogShapeReport::at_least_log_concave() const noexcept {
    return classification == LogShape::log_concave || classification == LogShape::log_linear;
}

LogShapeReport classify_log_shape(const Integrand& f, double lo, double hi, int n, double relative_band) {
    if (n < 5) throw std::invalid_argument("log-shape classification needs n >= 5");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("log-shape classification needs finite lo < hi");
    }
    if (!(relative_band >= 0.0)) throw std::invalid_argument("band must be >= 0");

    LogShapeReport rep;
    rep.grid.resize(static_cast<std::size_t>(n));
    std::vector<double> logs(rep.grid.size());
    const double step = (hi - lo) / (n + 1);
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        const double x = lo + static_cast<double>(i + 1) * step;
        rep.grid[i] = x;
        const double fx = f(x);
        if (!(fx > 0.0) || !std::isfinite(fx)) {
            rep.classification = LogShape::indeterminate;
            rep.diagnostic = "f is not positive and finite at x = " + std::to_string(x);
            return rep;
        }
        logs[i] = std::log(fx);
    }

    double lo2 = std::numeric_limits<double>::infinity();
    double hi2 = -lo2;
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < logs.size(); ++i) {
        const double s = logs[i - 1] - 2.0 * logs[i] + logs[i + 1];
        lo2 = std::min(lo2, s);
        hi2 = std::max(hi2, s);
        scale = std::max(scale, std::abs(logs[i - 1]) + 2.0 * std::abs(logs[i]) + std::abs(logs[i + 1]));
    }
    rep.min_second_difference = lo2;
    rep.max_second_difference = hi2;
    rep.tolerance_band = relative_band * scale;

    const bool concave = hi2 <= rep.tolerance_band;
    const bool convex = lo2 >= -rep.tolerance_band;
    if (concave && convex) {
        rep.classification = LogShape::log_linear;
    } else if (concave) {
        rep.classification = LogShape::log_concave;
    } else if (convex) {
        rep.classification = LogShape::log_convex;
    } else {
        rep.classification = LogShape::indeterminate;
        rep.diagnostic = "second differences of log f take both signs beyond the band";
    }
    return rep;
}

double comparison_slack(double err_a, double err_b) noexcept {
    return kSlackErrFactor * (err_a + err_b) + kSlackFloor;
}

void assess(SweepCheck& check, std::span<const Cell> cells) {
    check.violations.clear();
    check.slack = 0.0;
    bool nonfinite = false, up = false, down = false, any_pair = false;
    for (const auto& line : check.lines) {
        for (std::size_t k = 0; k < line.size(); ++k) {
            const Cell& b = cells[line[k]];
            if (!b.value.is_finite()) {
                nonfinite = true;
                continue;
            }
            if (k == 0) continue;
            const Cell& a = cells[line[k - 1]];
            if (!a.value.is_finite()) continue;
            const double slack = comparison_slack(a.value.err_estimate, b.value.err_estimate);
            check.slack = std::max(check.slack, slack);
            const double diff = b.value.value - a.value.value;
            any_pair = true;
            up = up || diff > slack;
            down = down || diff < -slack;
            if (check.expected == Direction::nondecreasing && diff < -slack) {
                check.violations.push_back({line[k], -diff});
            } else if (check.expected == Direction::nonincreasing && diff > slack) {
                check.violations.push_back({line[k], diff});
            }
        }
    }
    check.observed = !any_pair ? Trend::none
                     : up && down ? Trend::mixed
                     : up         ? Trend::nondecreasing
                     : down       ? Trend::nonincreasing
                                  : Trend::constant;
    if (!check.violations.empty()) {
        check.verdict = Verdict::fail;
    } else if (nonfinite) {
        check.verdict = Verdict::inconclusive;
    } else if (check.expected == Direction::report_only) {
        check.verdict = Verdict::not_asserted;
    } else {
        check.verdict = Verdict::pass;
    }
}

const SweepCheck& MonotonicityReport::along_d() const {
    for (const auto& ch : checks) {
        if (ch.along == Axis::d) return ch;
    }
    throw std::logic_error("report has no along-d check");
}

const SweepCheck& MonotonicityReport::along_c() const {
    for (const auto& ch : checks) {
        if (ch.along == Axis::c) return ch;
    }
    throw std::logic_error("report has no along-c check");
}

void reassess(MonotonicityReport& report) { finish_report(report); }

Direction theorem1_direction(LogShape cdf_shape) noexcept {
    // Only the log-concave branch is asserted.
    return cdf_shape == LogShape::log_concave ? Direction::nondecreasing : Direction::report_only;
}

MonotonicityReport verify_theorem1(const Distribution& dist, double c, std::span<const double> d_grid,
                                   const QuadratureConfig& cfg) {
    cfg.validate();
    require_increasing(d_grid, "d");
    if (!std::isfinite(c) || !(c < d_grid.front())) throw std::invalid_argument("theorem1 needs c < every d");

    MonotonicityReport rep;
    rep.claim = Claim::theorem1;
    rep.dist = dist;
    rep.cfg = cfg;
    rep.c_grid = {c};
    rep.d_grid.assign(d_grid.begin(), d_grid.end());
    for (double d : d_grid) {
        Cell cell;
        cell.c = c;
        cell.d = d;
        cell.value = extropy(dist, IntervalCondition{c, d}, cfg);
        cell.psi = theorem1_psi(dist, c, d, cfg);
        rep.cells.push_back(std::move(cell));
    }

    rep.hypothesis_subject = "cdf";
    rep.hypothesis = shape_on(dist, true, c, d_grid.back());
    const Direction expected = theorem1_direction(rep.hypothesis.classification);
    rep.hypotheses_hold = expected != Direction::report_only;

    SweepCheck check{Axis::d, expected,
                     {}, {}, 0.0, Verdict::not_asserted, Trend::none};
    auto& line = check.lines.emplace_back();
    for (std::size_t i = 0; i < rep.cells.size(); ++i) line.push_back(i);
    rep.checks = {std::move(check)};
    finish_report(rep);
    return rep;
}

MonotonicityReport verify_theorem2(const Distribution& dist, const WeightSpec& w, std::span<const double> c_grid,
                                   std::span<const double> d_grid, const QuadratureConfig& cfg,
                                   DiffConvention convention) {
    cfg.validate();
    require_matrix(c_grid, d_grid);

    MonotonicityReport rep;
    rep.claim = Claim::theorem2;
    rep.dist = dist;
    rep.weight = w;
    rep.convention = convention;
    rep.cfg = cfg;
    rep.c_grid.assign(c_grid.begin(), c_grid.end());
    rep.d_grid.assign(d_grid.begin(), d_grid.end());

    rep.hypothesis_subject = "pdf";
    rep.hypothesis = shape_on(dist, false, c_grid.front(), d_grid.back());
    rep.hypotheses_hold = rep.hypothesis.at_least_log_concave() && w.monotone() != Monotone::increasing;
    const Direction up = rep.hypotheses_hold ? Direction::nondecreasing : Direction::report_only;
    const Direction down = rep.hypotheses_hold ? Direction::nonincreasing : Direction::report_only;

    fill_matrix(rep, up, down, [&](double c, double d) {
        const auto ctx = DiffDensityContext::make(dist, IntervalCondition{c, d}, convention, cfg);
        if (!ctx) return MeasureValue::undefined("conditioning interval has zero probability mass");
        return weighted_extropy_of_diff(*ctx, w);
    });
    finish_report(rep);
    return rep;
}

MonotonicityReport verify_lemma_a(const Distribution& dist, const Integrand& phi, std::string_view phi_name,
                                  std::span<const double> c_grid, std::span<const double> d_grid,
                                  const QuadratureConfig& cfg) {
    cfg.validate();
    require_matrix(c_grid, d_grid);
    {
        const auto probe = linspace(0.0, d_grid.back() - c_grid.front(), kShapeGridPoints);
        for (std::size_t i = 1; i < probe.size(); ++i) {
            const double a = phi(probe[i - 1]), b = phi(probe[i]);
            if (b < a - 1e-12 * std::max(1.0, std::abs(a))) {
                throw std::invalid_argument("phi must be nondecreasing on [0, max d - min c]");
            }
        }
    }

    MonotonicityReport rep;
    rep.claim = Claim::lemma_a;
    rep.dist = dist;
    rep.phi = std::string(phi_name);
    rep.cfg = cfg;
    rep.c_grid.assign(c_grid.begin(), c_grid.end());
    rep.d_grid.assign(d_grid.begin(), d_grid.end());

    rep.hypothesis_subject = "pdf";
    rep.hypothesis = shape_on(dist, false, c_grid.front(), d_grid.back());
    rep.hypotheses_hold = rep.hypothesis.at_least_log_concave();
    const Direction up = rep.hypotheses_hold ? Direction::nondecreasing : Direction::report_only;
    const Direction down = rep.hypotheses_hold ? Direction::nonincreasing : Direction::report_only;

    fill_matrix(rep, up, down, [&](double c, double d) {
        const auto ctx = DiffDensityContext::make(dist, IntervalCondition{c, d}, DiffConvention::normalized, cfg);
        if (!ctx) return MeasureValue::undefined("conditioning interval has zero probability mass");
        return conditional_expectation(*ctx, phi);
    });
    finish_report(rep);
    return rep;
}

MonotonicityReport verify_lemma_b(const Distribution& dist, const IntervalCondition& S,
                                  std::span<const double> v_grid, const QuadratureConfig& cfg,
                                  DiffConvention convention) {
    cfg.validate();
    require_increasing(v_grid, "v");
    if (v_grid.front() < 0.0) throw std::invalid_argument("v grid must be nonnegative");

    MonotonicityReport rep;
    rep.claim = Claim::lemma_b;
    rep.dist = dist;
    rep.convention = convention;
    rep.cfg = cfg;
    rep.c_grid = {S.c};
    rep.d_grid = {S.d};
    rep.v_grid.assign(v_grid.begin(), v_grid.end());

    const auto ctx = DiffDensityContext::make(dist, S, convention, cfg);
    for (double v : v_grid) {
        Cell cell;
        cell.c = S.c;
        cell.d = S.d;
        cell.v = v;
        if (!ctx) {
            cell.value = MeasureValue::undefined("conditioning interval has zero probability mass");
        } else {
            try {
                const auto h = ctx->density(v);
                cell.value = h.converged() ? MeasureValue::finite(h.value, h.err_estimate)
                                           : MeasureValue::undefined("inner integral did not reach tolerance");
            } catch (const QuadratureError& e) {
                cell.value = MeasureValue::undefined(e.what());
            }
        }
        rep.cells.push_back(std::move(cell));
    }

    rep.hypothesis_subject = "pdf";
    rep.hypothesis = shape_on(dist, false, S.c, S.d);
    rep.hypotheses_hold = rep.hypothesis.at_least_log_concave();
    SweepCheck check{Axis::v, rep.hypotheses_hold ? Direction::nonincreasing : Direction::report_only,
                     {}, {}, 0.0, Verdict::not_asserted, Trend::none};
    auto& line = check.lines.emplace_back();
    for (std::size_t i = 0; i < rep.cells.size(); ++i) line.push_back(i);
    rep.checks = {std::move(check)};
    finish_report(rep);
    return rep;
}

MonteCarloEstimate mc_oracle(const Distribution& dist, const IntervalCondition& S, const Integrand& phi,
                             std::uint64_t n, std::uint64_t seed) {
    constexpr std::uint64_t kMinSamples = 10'000;
    constexpr double kMinAcceptance = 1e-4;
    constexpr std::uint64_t kCheckEvery = 1u << 20;
    if (n < kMinSamples) throw std::invalid_argument("mc_oracle needs n >= 10000");

    PairSampler sampler(dist, seed);
    std::uint64_t accepted = 0, attempts = 0;
    double mean = 0.0, m2 = 0.0;
    while (accepted < n) {
        const double y1 = sampler.draw();
        const double y2 = sampler.draw();
        ++attempts;
        if (y1 > S.c && y1 < S.d && y2 > S.c && y2 < S.d) {
            ++accepted;
            const double x = phi(std::abs(y1 - y2));
            const double delta = x - mean;
            mean += delta / static_cast<double>(accepted);
            m2 += delta * (x - mean);
        }
        if (attempts % kCheckEvery == 0 &&
            static_cast<double>(accepted) < kMinAcceptance * static_cast<double>(attempts)) {
            throw std::runtime_error("rejection sampling acceptance below 1e-4; interval too small");
        }
    }
    const double variance = m2 / static_cast<double>(n - 1);
    return {mean, std::sqrt(variance / static_cast<double>(n)), attempts};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

}  // namespace xtropy

#include "xtropy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace xtropy {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Segment {
    double a;
    double b;
    double value;
    double err;
};

bool by_error(const Segment& x, const Segment& y) { return x.err < y.err; }

double eval(const Integrand& f, double x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) {
        throw QuadratureError("integrand is not finite at y = " + std::to_string(x));
    }
    return fx;
}

Segment gauss_kronrod_21(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = eval(f, center);

    std::array<double, 10> fv1{}, fv2{};
    double resk = kWgk[10] * fc;
    double resg = 0.0;
    double resabs = std::abs(resk);
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = eval(f, center - dx);
        fv2[j] = eval(f, center + dx);
        const double pair = fv1[j] + fv2[j];
        resk += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }

    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    const double scale = std::abs(half);
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    return {a, b, resk * half, err};
}

// Globally adaptive bisection of the segment with the largest error.
IntegralResult adaptive(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                        double abs_floor = 0.0) {
    std::vector<Segment> heap{gauss_kronrod_21(f, a, b)};
    double total = heap.front().value;
    double total_err = heap.front().err;
    int subdivisions = 1;
    bool stuck = false;

    auto tolerance = [&] { return std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), abs_floor}); };

    while (total_err > tolerance() && subdivisions < cfg.max_subdivisions) {
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Segment worst = heap.back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Segment is at floating-point resolution and cannot be refined.
            std::push_heap(heap.begin(), heap.end(), by_error);
            stuck = true;
            break;
        }
        heap.pop_back();
        const Segment left = gauss_kronrod_21(f, worst.a, mid);
        const Segment right = gauss_kronrod_21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        ++subdivisions;
    }

    // Resum to shed the drift of the running updates.
    std::sort(heap.begin(), heap.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, err = 0.0;
    for (const auto& s : heap) {
        value += s.value;
        err += s.err;
    }
    IntegralResult out{value, err, subdivisions, IntegralStatus::converged};
    if (stuck || err > std::max({cfg.abs_tol, cfg.rel_tol * std::abs(value), abs_floor})) {
        out.status = IntegralStatus::max_subdivisions_reached;
    }
    return out;
}

// Integral over (a, b) with a possible singularity at `a` (toward_upper =
// false) or at `b` (toward_upper = true). The half away from the singular end
// is integrated directly; the other half is cut into panels whose widths halve
// toward the endpoint. Contributions of a convergent singularity decay
// geometrically; a non-decaying run of panels signals divergence.
IntegralResult singular_end(const Integrand& f, double a, double b, bool toward_upper,
                            const QuadratureConfig& cfg) {
    constexpr int kMinPanels = 30;  // past the pre-asymptotic region of smooth factors
    constexpr int kMaxPanels = 1000;
    constexpr int kFlatRun = 3;
    constexpr double kFlatRatio = 0.99;

    const double width = b - a;
    const double mid = a + 0.5 * width;
    IntegralResult bulk = toward_upper ? adaptive(f, a, mid, cfg) : adaptive(f, mid, b, cfg);
    double value = bulk.value;
    double err = bulk.err_estimate;
    int subdivisions = bulk.subdivisions_used;
    bool ok = bulk.converged();

    double panel_width = 0.5 * width;
    double prev = bulk.value;
    int flat_run = 0;
    double remainder = INFINITY;  // bound on the panels not yet integrated
    for (int k = 1; k <= kMaxPanels; ++k) {
        const double inner_width = 0.5 * panel_width;
        const double lo = toward_upper ? b - panel_width : a + inner_width;
        const double hi = toward_upper ? b - inner_width : a + panel_width;
        if (!(lo < hi) || lo == a || hi == b) {  // no longer resolvable in floating point
            remainder = std::min(remainder, std::abs(prev));
            break;
        }

        const double floor = 0.1 * cfg.target(value);
        const IntegralResult piece = adaptive(f, lo, hi, cfg, floor);
        value += piece.value;
        err += piece.err_estimate;
        subdivisions += piece.subdivisions_used;
        ok = ok && piece.converged();

        const double ratio = prev != 0.0 ? std::abs(piece.value) / std::abs(prev) : 0.0;
        flat_run = (ratio >= kFlatRatio && std::abs(piece.value) > cfg.target(value)) ? flat_run + 1 : 0;
        if (k >= kMinPanels && flat_run >= kFlatRun) {
            return {value, err, subdivisions, IntegralStatus::divergence_suspected};
        }
        // Remaining panels form (at most) a geometric series with ratio `ratio`.
        const double tail = ratio < kFlatRatio ? std::abs(piece.value) * ratio / (1.0 - ratio) : INFINITY;
        remainder = tail;
        if (k >= 2 && tail <= 0.25 * cfg.target(value)) {
            value += std::copysign(tail, piece.value);
            err += tail;
            const auto status = ok && err <= cfg.target(value) ? IntegralStatus::converged
                                                               : IntegralStatus::max_subdivisions_reached;
            return {value, err, subdivisions, status};
        }
        prev = piece.value;
        panel_width = inner_width;
    }
    err += remainder;
    const auto status = ok && err <= cfg.target(value) ? IntegralStatus::converged
                                                       : IntegralStatus::max_subdivisions_reached;
    return {value, err, subdivisions, status};
}

IntegralResult combine(const IntegralResult& x, const IntegralResult& y, const QuadratureConfig& cfg) {
    IntegralResult out{x.value + y.value, x.err_estimate + y.err_estimate,
                       x.subdivisions_used + y.subdivisions_used, IntegralStatus::converged};
    if (x.status == IntegralStatus::divergence_suspected || y.status == IntegralStatus::divergence_suspected) {
        out.status = IntegralStatus::divergence_suspected;
    } else if (!x.converged() || !y.converged() || out.err_estimate > cfg.target(out.value)) {
        out.status = IntegralStatus::max_subdivisions_reached;
    }
    return out;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw std::invalid_argument("tolerances must be > 0");
    if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
    if (!(tail_mass > 0.0 && tail_mass < 1e-3)) throw std::invalid_argument("tail_mass must lie in (0, 1e-3)");
}

QuadratureConfig QuadratureConfig::from_environment() {
    QuadratureConfig cfg;
    if (const char* env = std::getenv("XTROPY_TAIL_MASS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0') throw std::invalid_argument("XTROPY_TAIL_MASS is not a number");
        cfg.tail_mass = v;
    }
    cfg.validate();
    return cfg;
}

double QuadratureConfig::target(double value) const noexcept {
    return std::max(abs_tol, rel_tol * std::abs(value));
}

std::string_view to_string(IntegralStatus status) noexcept {
    switch (status) {
        case IntegralStatus::converged: return "converged";
        case IntegralStatus::max_subdivisions_reached: return "max_subdivisions_reached";
        case IntegralStatus::divergence_suspected: return "divergence_suspected";
    }
    return "?";
}

IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                         const EndpointHints& hints) {
    cfg.validate();
    if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("integration bounds are NaN");
    if (std::isinf(a)) {
        if (a > 0 || !hints.lower_truncation) throw std::invalid_argument("infinite lower bound needs a truncation point");
        a = *hints.lower_truncation;
    }
    if (std::isinf(b)) {
        if (b < 0 || !hints.upper_truncation) throw std::invalid_argument("infinite upper bound needs a truncation point");
        b = *hints.upper_truncation;
    }
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("integration requires a < b");
    }

    if (hints.singular_lower && hints.singular_upper) {
        const double mid = 0.5 * (a + b);
        return combine(singular_end(f, a, mid, false, cfg), singular_end(f, mid, b, true, cfg), cfg);
    }
    if (hints.singular_lower) return singular_end(f, a, b, false, cfg);
    if (hints.singular_upper) return singular_end(f, a, b, true, cfg);
    return adaptive(f, a, b, cfg);
}

double central_difference(const Integrand& f, double y, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("central difference step must be > 0");
    return (f(y + h) - f(y - h)) / (2.0 * h);
}

double default_difference_step(double y) noexcept {
    return std::cbrt(kEps) * std::max(1.0, std::abs(y));
}

}  // namespace xtropy

#include "cli.hpp"

#include "xtropy/convolution.hpp"
#include "xtropy/distributions.hpp"
#include "xtropy/measures.hpp"
#include "xtropy/numeric_text.hpp"
#include "xtropy/quadrature.hpp"
#include "xtropy/report.hpp"
#include "xtropy/verify.hpp"
#include "xtropy/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace xtropy::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string dist, pmf, measure, weight = "one", theta, lambda;
    std::string c, d, c_range, d_range, v_range;
    std::string convention = "normalized", phi = "v", mc_samples, seed = "1";
    std::string expect_c, expect_d, expect_v;
    std::string format, out_path;
    std::string abs_tol, rel_tol, max_subdiv, tail_mass;
    bool strict = false;
};

struct Output {
    std::string text;
    int code = exit_ok;
};

double real_flag(const char* flag, const std::string& text) {
    try {
        return parse_real(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": not a number: '" + text + "'");
    }
}

std::optional<double> opt_real(const char* flag, const std::string& text) {
    if (text.empty()) return std::nullopt;
    return real_flag(flag, text);
}

std::uint64_t count_flag(const char* flag, const std::string& text) {
    std::uint64_t n = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw UsageError(std::string(flag) + ": not a nonnegative integer: '" + text + "'");
    }
    return n;
}

// lo:hi:n, n evenly spaced points inclusive of both ends.
std::vector<double> range_flag(const char* flag, const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw UsageError(std::string(flag) + ": expected lo:hi:n, got '" + text + "'");
    }
    const double lo = real_flag(flag, text.substr(0, first));
    const double hi = real_flag(flag, text.substr(first + 1, second - first - 1));
    const auto n = count_flag(flag, text.substr(second + 1));
    if (n < 1) throw UsageError(std::string(flag) + ": n must be at least 1");
    if (n == 1 ? lo != hi : !(lo < hi)) {
        throw UsageError(std::string(flag) + ": need lo < hi (or lo == hi with n = 1)");
    }
    return linspace(lo, hi, n);
}

QuadratureConfig config_from(const Flags& f) {
    QuadratureConfig cfg = QuadratureConfig::from_environment();
    if (auto v = opt_real("--abs-tol", f.abs_tol)) cfg.abs_tol = *v;
    if (auto v = opt_real("--rel-tol", f.rel_tol)) cfg.rel_tol = *v;
    if (auto v = opt_real("--tail-mass", f.tail_mass)) cfg.tail_mass = *v;
    if (!f.max_subdiv.empty()) {
        const auto n = count_flag("--max-subdiv", f.max_subdiv);
        if (n > 10'000'000) throw UsageError("--max-subdiv: too large");
        cfg.max_subdivisions = static_cast<int>(n);
    }
    cfg.validate();
    return cfg;
}

Distribution dist_flag(const Flags& f) {
    if (f.dist.empty()) throw UsageError("--dist is required");
    return Distribution::parse(f.dist);
}

IntervalCondition interval_flags(const Flags& f) {
    if (f.c.empty() || f.d.empty()) throw UsageError("--c and --d are both required");
    const double c = real_flag("--c", f.c), d = real_flag("--d", f.d);
    if (!(c < d)) throw UsageError("--c must be below --d");
    return IntervalCondition{c, d};
}

OptCondition optional_interval(const Flags& f) {
    if (f.c.empty() && f.d.empty()) return std::nullopt;
    return interval_flags(f);
}

DiffConvention convention_flag(const Flags& f) { return parse_convention(f.convention); }

// Table as a JSON array of row objects; empty fields become null and
// numeric fields numbers.
std::string table_json(const CsvTable& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            const std::string& field = row[i];
            if (field.empty()) {
                obj[t.header[i]] = nullptr;
                continue;
            }
            try {
                obj[t.header[i]] = parse_real(field);
            } catch (const std::invalid_argument&) {
                obj[t.header[i]] = field;
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string render(const Flags& f, const CsvTable& t) {
    return f.format == "json" ? table_json(t) : emit_csv(t);
}

int nonfinite_code(const Flags& f, bool any_nonfinite) {
    return f.strict && any_nonfinite ? exit_numeric : exit_ok;
}

Output cmd_measure(const Flags& f) {
    if (f.measure.empty()) throw UsageError("--measure is required");
    const MeasureKind kind = parse_measure(f.measure);
    if (!f.pmf.empty()) {
        if (!f.dist.empty()) throw UsageError("give either --dist or --pmf, not both");
        if (kind != MeasureKind::shannon && kind != MeasureKind::extropy) {
            throw UsageError("--pmf supports only the shannon and extropy measures");
        }
        if (!f.c.empty() || !f.d.empty()) throw UsageError("--pmf does not take --c/--d");
        const DiscretePmf pmf = DiscretePmf::parse(f.pmf);
        const double v = kind == MeasureKind::shannon ? discrete_entropy(pmf) : discrete_extropy(pmf);
        const MeasureRow row{std::nullopt, kind, "one", MeasureValue::finite(v, 0.0)};
        return {render(f, measure_table({&row, 1})), exit_ok};
    }
    const Distribution dist = dist_flag(f);
    const WeightSpec w = WeightSpec::parse(f.weight);
    MeasureParams params;
    if (auto v = opt_real("--theta", f.theta)) params.theta = *v;
    if (auto v = opt_real("--lambda", f.lambda)) params.lambda = *v;
    const OptCondition S = optional_interval(f);
    const QuadratureConfig cfg = config_from(f);

    const MeasureRow row{S, kind, kind == MeasureKind::wextropy ? w.to_string() : "one",
                         evaluate_measure(kind, dist, params, w, S, cfg)};
    return {render(f, measure_table({&row, 1})), nonfinite_code(f, !row.value.is_finite())};
}

Output cmd_sweep(const Flags& f) {
    if (f.measure.empty()) throw UsageError("--measure is required");
    const MeasureKind kind = parse_measure(f.measure);
    const Distribution dist = dist_flag(f);
    const WeightSpec w = WeightSpec::parse(f.weight);
    MeasureParams params;
    if (auto v = opt_real("--theta", f.theta)) params.theta = *v;
    if (auto v = opt_real("--lambda", f.lambda)) params.lambda = *v;

    if (!f.c.empty() && !f.c_range.empty()) throw UsageError("give --c or --c-range, not both");
    if (!f.d.empty() && !f.d_range.empty()) throw UsageError("give --d or --d-range, not both");
    if (f.c_range.empty() && f.d_range.empty()) throw UsageError("sweep needs --c-range and/or --d-range");
    if ((f.c.empty() && f.c_range.empty()) || (f.d.empty() && f.d_range.empty())) {
        throw UsageError("sweep needs a value or range for both c and d");
    }
    const auto cs = f.c_range.empty() ? std::vector<double>{real_flag("--c", f.c)} : range_flag("--c-range", f.c_range);
    const auto ds = f.d_range.empty() ? std::vector<double>{real_flag("--d", f.d)} : range_flag("--d-range", f.d_range);
    const QuadratureConfig cfg = config_from(f);

    const std::string weight_col = kind == MeasureKind::wextropy ? w.to_string() : "one";
    std::vector<MeasureRow> rows;
    bool any_nonfinite = false;
    for (double c : cs) {
        for (double d : ds) {
            if (!(c < d)) {
                rows.push_back({std::nullopt, kind, weight_col, MeasureValue::undefined("c must be below d")});
                any_nonfinite = true;
                continue;
            }
            const IntervalCondition S{c, d};
            rows.push_back({S, kind, weight_col, evaluate_measure(kind, dist, params, w, S, cfg)});
            any_nonfinite = any_nonfinite || !rows.back().value.is_finite();
        }
    }
    // rows with c >= d still report their coordinates
    CsvTable t = measure_table(rows);
    std::size_t i = 0;
    for (double c : cs) {
        for (double d : ds) {
            t.rows[i][0] = csv_number(c);
            t.rows[i][1] = csv_number(d);
            ++i;
        }
    }
    return {render(f, t), nonfinite_code(f, any_nonfinite)};
}

Output cmd_diff_density(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const IntervalCondition S = interval_flags(f);
    if (f.v_range.empty()) throw UsageError("--v-range is required");
    const auto vs = range_flag("--v-range", f.v_range);
    const DiffConvention conv = convention_flag(f);
    const QuadratureConfig cfg = config_from(f);

    CsvTable t{{"c", "d", "v", "convention", "value", "err", "status"}, {}};
    const auto ctx = DiffDensityContext::make(dist, S, conv, cfg);
    bool any_nonfinite = false;
    for (double v : vs) {
        MeasureValue value = MeasureValue::undefined("conditioning interval has zero probability mass");
        if (ctx) {
            const IntegralResult h = ctx->density(v);
            value = h.converged() ? MeasureValue::finite(h.value, h.err_estimate)
                                  : MeasureValue::undefined("inner integral did not reach tolerance");
        }
        any_nonfinite = any_nonfinite || !value.is_finite();
        const bool fin = value.is_finite();
        t.rows.push_back({csv_number(S.c), csv_number(S.d), csv_number(v), std::string(to_string(conv)),
                          fin ? csv_number(value.value) : "", fin ? csv_number(value.err_estimate) : "",
                          std::string(to_string(value.status))});
    }
    return {render(f, t), nonfinite_code(f, any_nonfinite)};
}

Output cmd_diff_expect(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const IntervalCondition S = interval_flags(f);
    const Integrand phi = parse_phi(f.phi);
    const bool with_mc = !f.mc_samples.empty();
    const std::uint64_t samples = with_mc ? count_flag("--mc-samples", f.mc_samples) : 0;
    const std::uint64_t seed = count_flag("--seed", f.seed);
    if (with_mc && samples < 10'000) throw UsageError("--mc-samples must be at least 10000");
    const QuadratureConfig cfg = config_from(f);

    const auto ctx = DiffDensityContext::make(dist, S, DiffConvention::normalized, cfg);
    const MeasureValue value =
        ctx ? conditional_expectation(*ctx, phi)
            : MeasureValue::undefined("conditioning interval has zero probability mass");
    CsvTable t{{"c", "d", "phi", "value", "err", "status"}, {}};
    const bool fin = value.is_finite();
    std::vector<std::string> row{csv_number(S.c), csv_number(S.d), f.phi, fin ? csv_number(value.value) : "",
                                 fin ? csv_number(value.err_estimate) : "", std::string(to_string(value.status))};
    if (with_mc) {
        t.header.insert(t.header.end(), {"mc_estimate", "mc_stderr"});
        const MonteCarloEstimate mc = mc_oracle(dist, S, phi, samples, seed);
        row.push_back(csv_number(mc.estimate));
        row.push_back(csv_number(mc.stderr_));
    }
    t.rows.push_back(std::move(row));
    return {render(f, t), nonfinite_code(f, !fin)};
}

Output cmd_diff_wextropy(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const IntervalCondition S = interval_flags(f);
    const WeightSpec w = WeightSpec::parse(f.weight);
    const DiffConvention conv = convention_flag(f);
    const QuadratureConfig cfg = config_from(f);

    const auto ctx = DiffDensityContext::make(dist, S, conv, cfg);
    const MeasureValue value = ctx ? weighted_extropy_of_diff(*ctx, w)
                                   : MeasureValue::undefined("conditioning interval has zero probability mass");
    CsvTable t{{"c", "d", "weight", "convention", "value", "err", "status"}, {}};
    const bool fin = value.is_finite();
    t.rows.push_back({csv_number(S.c), csv_number(S.d), w.to_string(), std::string(to_string(conv)),
                      fin ? csv_number(value.value) : "", fin ? csv_number(value.err_estimate) : "",
                      std::string(to_string(value.status))});
    return {render(f, t), nonfinite_code(f, !fin)};
}

Direction direction_flag(const char* flag, const std::string& text) {
    for (auto d : {Direction::nondecreasing, Direction::nonincreasing, Direction::report_only}) {
        if (text == to_string(d)) return d;
    }
    throw UsageError(std::string(flag) + ": expected nondecreasing, nonincreasing or report_only");
}

// --expect-* replaces the direction derived from the hypotheses.
Output verify_output(const Flags& f, MonotonicityReport rep) {
    bool overridden = false;
    for (auto& ch : rep.checks) {
        const std::string& text = ch.along == Axis::c ? f.expect_c : ch.along == Axis::d ? f.expect_d : f.expect_v;
        if (text.empty()) continue;
        ch.expected = direction_flag(ch.along == Axis::c ? "--expect-c" : ch.along == Axis::d ? "--expect-d" : "--expect-v",
                                     text);
        overridden = true;
    }
    if (overridden) reassess(rep);
    Output o;
    o.text = f.format == "csv" ? emit_csv(report_table(rep)) : emit_report(rep);
    switch (rep.verdict) {
        case Verdict::fail: o.code = exit_violation; break;
        case Verdict::inconclusive: o.code = f.strict ? exit_numeric : exit_ok; break;
        default: o.code = exit_ok; break;
    }
    return o;
}

std::vector<double> required_range(const char* flag, const std::string& text) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return range_flag(flag, text);
}

Output cmd_theorem1(const Flags& f) {
    const Distribution dist = dist_flag(f);
    if (f.c.empty()) throw UsageError("--c is required");
    const double c = real_flag("--c", f.c);
    const auto ds = required_range("--d-range", f.d_range);
    if (!(c < ds.front())) throw UsageError("--c must be below every d");
    return verify_output(f, verify_theorem1(dist, c, ds, config_from(f)));
}

void require_matrix_flags(const std::vector<double>& cs, const std::vector<double>& ds) {
    if (!(cs.back() < ds.front())) throw UsageError("every c must lie below every d (max c < min d)");
}

Output cmd_theorem2(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const WeightSpec w = WeightSpec::parse(f.weight);
    const auto cs = required_range("--c-range", f.c_range);
    const auto ds = required_range("--d-range", f.d_range);
    require_matrix_flags(cs, ds);
    const DiffConvention conv = convention_flag(f);
    return verify_output(f, verify_theorem2(dist, w, cs, ds, config_from(f), conv));
}

Output cmd_lemma_a(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const Integrand phi = parse_phi(f.phi);
    const auto cs = required_range("--c-range", f.c_range);
    const auto ds = required_range("--d-range", f.d_range);
    require_matrix_flags(cs, ds);
    return verify_output(f, verify_lemma_a(dist, phi, f.phi, cs, ds, config_from(f)));
}

Output cmd_lemma_b(const Flags& f) {
    const Distribution dist = dist_flag(f);
    const IntervalCondition S = interval_flags(f);
    const auto vs = required_range("--v-range", f.v_range);
    if (vs.front() < 0.0) throw UsageError("--v-range must be nonnegative");
    const DiffConvention conv = convention_flag(f);
    return verify_output(f, verify_lemma_b(dist, S, vs, config_from(f), conv));
}

Output cmd_list(const Flags& f) {
    CsvTable t{{"kind", "id", "detail"}, {}};
    for (const auto& fam : family_catalog()) t.rows.push_back({"family", std::string(fam.id), std::string(fam.signature)});
    for (const auto& m : measure_catalog()) t.rows.push_back({"measure", std::string(m.id), std::string(m.uses)});
    for (const auto& w : weight_catalog()) t.rows.push_back({"weight", std::string(w.id), std::string(w.formula)});
    for (const auto& p : phi_catalog()) t.rows.push_back({"phi", std::string(p.id), std::string(p.formula)});
    for (auto conv : {DiffConvention::normalized, DiffConvention::paper_literal}) {
        t.rows.push_back({"convention", std::string(to_string(conv)), ""});
    }
    for (auto claim : {Claim::theorem1, Claim::theorem2, Claim::lemma_a, Claim::lemma_b}) {
        t.rows.push_back({"claim", std::string(to_string(claim)), ""});
    }
    return {render(f, t), exit_ok};
}

void add_output_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", f.out_path, "write output to this file instead of stdout");
}

void add_numeric_flags(CLI::App* sub, Flags& f) {
    add_output_flags(sub, f);
    sub->add_flag("--strict", f.strict, "exit 3 on divergent, undefined or inconclusive results");
    sub->add_option("--abs-tol", f.abs_tol, "absolute quadrature tolerance");
    sub->add_option("--rel-tol", f.rel_tol, "relative quadrature tolerance");
    sub->add_option("--max-subdiv", f.max_subdiv, "maximum adaptive subdivisions");
    sub->add_option("--tail-mass", f.tail_mass, "probability mass cut from each infinite tail");
}

void add_dist(CLI::App* sub, Flags& f) { sub->add_option("--dist", f.dist, "family:params, e.g. weibull:2,1"); }
void add_interval(CLI::App* sub, Flags& f) {
    sub->add_option("--c", f.c, "lower end of the conditioning interval");
    sub->add_option("--d", f.d, "upper end of the conditioning interval");
}

void write_output(const Flags& f, const std::string& text, std::ostream& out) {
    if (f.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open --out file '" + f.out_path + "'");
    file << text;
    if (!file) throw UsageError("failed writing --out file '" + f.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Entropy and extropy measures with numerical monotonicity checks", "xtropy"};
    app.require_subcommand(1, 1);

    auto* measure = app.add_subcommand("measure", "one measure value as a CSV row");
    add_dist(measure, f);
    measure->add_option("--pmf", f.pmf, "discrete pmf, e.g. 0.3,0.7 (shannon and extropy only)");
    measure->add_option("--measure", f.measure, "measure id (see list)");
    measure->add_option("--weight", f.weight, "weight id for wextropy");
    measure->add_option("--theta", f.theta, "order theta");
    measure->add_option("--lambda", f.lambda, "second order lambda (kapur, varma)");
    add_interval(measure, f);
    add_numeric_flags(measure, f);

    auto* sweep = app.add_subcommand("sweep", "a measure over a grid of conditioning intervals");
    add_dist(sweep, f);
    sweep->add_option("--measure", f.measure, "measure id (see list)");
    sweep->add_option("--weight", f.weight, "weight id for wextropy");
    sweep->add_option("--theta", f.theta, "order theta");
    sweep->add_option("--lambda", f.lambda, "second order lambda (kapur, varma)");
    add_interval(sweep, f);
    sweep->add_option("--c-range", f.c_range, "lo:hi:n");
    sweep->add_option("--d-range", f.d_range, "lo:hi:n");
    add_numeric_flags(sweep, f);

    auto* diff_density = app.add_subcommand("diff-density", "density h(v) of |Y1 - Y2| given S");
    add_dist(diff_density, f);
    add_interval(diff_density, f);
    diff_density->add_option("--v-range", f.v_range, "lo:hi:n");
    diff_density->add_option("--convention", f.convention, "normalized or paper_literal");
    add_numeric_flags(diff_density, f);

    auto* diff_expect = app.add_subcommand("diff-expect", "E(phi(|Y1 - Y2|) | S), optionally with a Monte Carlo check");
    add_dist(diff_expect, f);
    add_interval(diff_expect, f);
    diff_expect->add_option("--phi", f.phi, "one, v, v2 or exp_neg");
    diff_expect->add_option("--mc-samples", f.mc_samples, "accepted Monte Carlo pairs (>= 10000)");
    diff_expect->add_option("--seed", f.seed, "Monte Carlo seed");
    add_numeric_flags(diff_expect, f);

    auto* diff_wextropy = app.add_subcommand("diff-wextropy", "weighted extropy of |Y1 - Y2| given S");
    add_dist(diff_wextropy, f);
    add_interval(diff_wextropy, f);
    diff_wextropy->add_option("--weight", f.weight, "weight id");
    diff_wextropy->add_option("--convention", f.convention, "normalized or paper_literal");
    add_numeric_flags(diff_wextropy, f);

    auto* verify = app.add_subcommand("verify", "check a monotonicity claim over a grid");
    verify->require_subcommand(1, 1);
    auto* theorem1 = verify->add_subcommand("theorem1", "extropy given (c, d) along d");
    add_dist(theorem1, f);
    theorem1->add_option("--c", f.c, "fixed lower end");
    theorem1->add_option("--d-range", f.d_range, "lo:hi:n");
    theorem1->add_option("--expect-d", f.expect_d, "override the asserted direction along d");
    add_numeric_flags(theorem1, f);

    auto* theorem2 = verify->add_subcommand("theorem2", "weighted extropy of |Y1 - Y2| over a (c, d) grid");
    add_dist(theorem2, f);
    theorem2->add_option("--weight", f.weight, "weight id");
    theorem2->add_option("--c-range", f.c_range, "lo:hi:n");
    theorem2->add_option("--d-range", f.d_range, "lo:hi:n");
    theorem2->add_option("--convention", f.convention, "normalized or paper_literal");
    theorem2->add_option("--expect-d", f.expect_d, "override the asserted direction along d");
    theorem2->add_option("--expect-c", f.expect_c, "override the asserted direction along c");
    add_numeric_flags(theorem2, f);

    auto* lemma_a = verify->add_subcommand("lemma_a", "E(phi(V) | S) over a (c, d) grid");
    add_dist(lemma_a, f);
    lemma_a->add_option("--phi", f.phi, "nondecreasing phi: one, v or v2");
    lemma_a->add_option("--c-range", f.c_range, "lo:hi:n");
    lemma_a->add_option("--d-range", f.d_range, "lo:hi:n");
    lemma_a->add_option("--expect-d", f.expect_d, "override the asserted direction along d");
    lemma_a->add_option("--expect-c", f.expect_c, "override the asserted direction along c");
    add_numeric_flags(lemma_a, f);

    auto* lemma_b = verify->add_subcommand("lemma_b", "h(v; c, d) along v");
    add_dist(lemma_b, f);
    add_interval(lemma_b, f);
    lemma_b->add_option("--v-range", f.v_range, "lo:hi:n");
    lemma_b->add_option("--convention", f.convention, "normalized or paper_literal");
    lemma_b->add_option("--expect-v", f.expect_v, "override the asserted direction along v");
    add_numeric_flags(lemma_b, f);

    auto* list = app.add_subcommand("list", "families, measures, weights and test functions accepted");
    add_output_flags(list, f);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const std::vector<std::pair<CLI::App*, std::function<Output(const Flags&)>>> commands{
        {measure, cmd_measure},          {sweep, cmd_sweep},       {diff_density, cmd_diff_density},
        {diff_expect, cmd_diff_expect},  {diff_wextropy, cmd_diff_wextropy}, {theorem1, cmd_theorem1},
        {theorem2, cmd_theorem2},        {lemma_a, cmd_lemma_a},   {lemma_b, cmd_lemma_b},
        {list, cmd_list},
    };
    try {
        for (const auto& [sub, fn] : commands) {
            if (!sub->parsed()) continue;
            if (f.format.empty()) f.format = verify->parsed() ? "json" : "csv";
            const Output o = fn(f);
            write_output(f, o.text, out);
            return o.code;
        }
        err << "error: no subcommand\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return exit_numeric;
    }
}

}  // namespace xtropy::cli

#include "xtropy/report.hpp"

#include "xtropy/numeric_text.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xtropy {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

Json numbers(std::span<const double> xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

Json direction_field(const MonotonicityReport& r, bool observed) {
    auto pick = [observed](const SweepCheck& ch) {
        return observed ? std::string(to_string(ch.observed)) : std::string(to_string(ch.expected));
    };
    if (r.checks.size() == 1) return pick(r.checks.front());
    Json out = Json::object();
    for (const auto& ch : r.checks) out[std::string(to_string(ch.along))] = pick(ch);
    return out;
}

bool asserts_direction(const MonotonicityReport& r) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [](const SweepCheck& ch) { return ch.expected != Direction::report_only; });
}

}  // namespace

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string emit_csv(const CsvTable& table) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += csv_field(fields[i]);
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, field_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        if (ch == '"' && field.empty()) {
            quoted = true;
            field_started = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
            field_started = true;
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            field_started = false;
        } else {
            field += ch;
            field_started = true;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
    if (field_started || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_number(double x) { return std::isfinite(x) ? format_real(x) : std::string(); }

std::string csv_number(const std::optional<double>& x) { return x ? csv_number(*x) : std::string(); }

CsvTable measure_table(std::span<const MeasureRow> rows) {
    CsvTable t{{"c", "d", "measure", "weight", "value", "err", "status"}, {}};
    for (const auto& r : rows) {
        const bool fin = r.value.is_finite();
        t.rows.push_back({r.S ? csv_number(r.S->c) : "", r.S ? csv_number(r.S->d) : "",
                          std::string(to_string(r.measure)), r.weight, fin ? csv_number(r.value.value) : "",
                          fin ? csv_number(r.value.err_estimate) : "", std::string(to_string(r.value.status))});
    }
    return t;
}

std::string emit_csv(std::span<const MeasureRow> rows) { return emit_csv(measure_table(rows)); }

CsvTable report_table(const MonotonicityReport& r) {
    CsvTable t;
    t.header = {"c", "d"};
    const bool has_v = r.claim == Claim::lemma_b;
    const bool has_psi = r.claim == Claim::theorem1;
    if (has_v) t.header.push_back("v");
    t.header.insert(t.header.end(), {"value", "err", "status"});
    if (has_psi) t.header.push_back("psi");
    for (const auto& cell : r.cells) {
        const bool fin = cell.value.is_finite();
        std::vector<std::string> row{csv_number(cell.c), csv_number(cell.d)};
        if (has_v) row.push_back(csv_number(cell.v));
        row.push_back(fin ? csv_number(cell.value.value) : "");
        row.push_back(fin ? csv_number(cell.value.err_estimate) : "");
        row.emplace_back(to_string(cell.value.status));
        if (has_psi) row.push_back(csv_number(cell.psi));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string emit_report(const MonotonicityReport& r) {
    Json j;
    j["claim"] = std::string(to_string(r.claim));
    j["dist"] = r.dist.to_string();
    j["params"] = numbers(r.dist.parameters());
    j["weight"] = r.weight ? Json(r.weight->to_string()) : Json(nullptr);
    if (r.claim == Claim::lemma_a) j["phi"] = r.phi;
    if (r.claim == Claim::theorem2 || r.claim == Claim::lemma_b) {
        j["convention"] = std::string(to_string(r.convention));
    }

    Json grid = Json::object();
    grid["c"] = numbers(r.c_grid);
    grid["d"] = numbers(r.d_grid);
    if (r.claim == Claim::lemma_b) grid["v"] = numbers(r.v_grid);
    j["grid"] = std::move(grid);

    Json values = Json::array();
    for (const auto& cell : r.cells) {
        Json v;
        v["c"] = number(cell.c);
        v["d"] = number(cell.d);
        if (cell.v) v["v"] = number(*cell.v);
        const bool fin = cell.value.is_finite();
        v["value"] = fin ? number(cell.value.value) : Json(nullptr);
        v["err"] = fin ? number(cell.value.err_estimate) : Json(nullptr);
        v["status"] = std::string(to_string(cell.value.status));
        if (!cell.value.diagnostic.empty()) v["diagnostic"] = cell.value.diagnostic;
        if (r.claim == Claim::theorem1) v["psi"] = cell.psi ? number(*cell.psi) : Json(nullptr);
        values.push_back(std::move(v));
    }
    j["values"] = std::move(values);

    j["expected_direction"] = direction_field(r, false);
    j["observed_direction"] = direction_field(r, true);

    Json hyp;
    hyp["subject"] = r.hypothesis_subject;
    hyp["log_shape"] = std::string(to_string(r.hypothesis.classification));
    hyp["min_second_difference"] = number(r.hypothesis.min_second_difference);
    hyp["max_second_difference"] = number(r.hypothesis.max_second_difference);
    hyp["band"] = number(r.hypothesis.tolerance_band);
    if (r.weight) hyp["weight_monotone"] = std::string(to_string(r.weight->monotone()));
    hyp["holds"] = r.hypotheses_hold;
    if (!r.hypothesis.diagnostic.empty()) hyp["diagnostic"] = r.hypothesis.diagnostic;
    j["hypothesis"] = std::move(hyp);

    Json violations = Json::array();
    double slack = 0.0;
    for (const auto& ch : r.checks) {
        slack = std::max(slack, ch.slack);
        for (const auto& v : ch.violations) {
            Json e;
            e["index"] = v.index;
            e["magnitude"] = number(v.magnitude);
            if (r.checks.size() > 1) e["along"] = std::string(to_string(ch.along));
            violations.push_back(std::move(e));
        }
    }
    j["violations"] = std::move(violations);
    j["slack"] = number(slack);
    j["nonfinite_cells"] = r.nonfinite_cells;

    Json tol;
    tol["abs_tol"] = r.cfg.abs_tol;
    tol["rel_tol"] = r.cfg.rel_tol;
    tol["max_subdivisions"] = r.cfg.max_subdivisions;
    tol["tail_mass"] = r.cfg.tail_mass;
    j["tolerances"] = std::move(tol);

    if (asserts_direction(r)) j["verdict"] = std::string(to_string(r.verdict));
    return j.dump(2) + "\n";
}

}  // namespace xtropy

#pragma once

#include "xtropy/measures.hpp"
#include "xtropy/verify.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtropy {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC 4180: quoted only when the field holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Header line then one line per row, each terminated by "\n".
std::string emit_csv(const CsvTable& table);

/// Inverse of emit_csv for well-formed input (quoted fields, doubled quotes,
/// embedded newlines). Throws std::invalid_argument on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Shortest round-trip text for finite numbers, empty otherwise.
std::string csv_number(double x);
std::string csv_number(const std::optional<double>& x);

struct MeasureRow {
    OptCondition S;
    MeasureKind measure = MeasureKind::extropy;
    std::string weight = "one";
    MeasureValue value;
};

/// `c,d,measure,weight,value,err,status`; c and d are empty for unconditioned rows.
CsvTable measure_table(std::span<const MeasureRow> rows);
std::string emit_csv(std::span<const MeasureRow> rows);

/// Cells of a report as a CSV table (lemma_b adds a v column, theorem1 a psi column).
CsvTable report_table(const MonotonicityReport& report);

/// Deterministic JSON rendering of a verification report, pretty-printed with
/// two-space indentation and a trailing newline.
///
/// Single-check reports (theorem1, lemma_b) carry `expected_direction` as a
/// string; two-check reports carry an object keyed by axis ("d", "c") and tag
/// each violation with its axis. `verdict` is omitted when no check asserts a
/// direction. Non-finite values serialize as null.
std::string emit_report(const MonotonicityReport& report);

}  // namespace xtropy

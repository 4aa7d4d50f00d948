#pragma once

// Rendering of ClaimReports and evaluation rows: shortest round-trip
// numbers, '.' decimal point, ',' separator, '\n' line ends, '#' comments.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eval_result.hpp"
#include "harness.hpp"

namespace pqell {

inline constexpr std::string_view kDivergesMarker = "DIVERGES";

/// Shortest round-trip decimal (at most 17 significant digits), locale
/// independent; "inf", "-inf", "nan" for non-finite values.
inline std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// One evaluated row: function,p,q,r,method,value,error_estimate.
struct OutputRow {
    std::string function;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    std::string method;
    std::optional<EvalResult> result;  // empty when divergent

    std::string csv() const
    {
        std::string line = csv_field(function) + "," + format_number(p) + "," + format_number(q) + "," +
                           format_number(r) + ",";
        if (result)
            line += std::string(to_string(result->method)) + "," + format_number(result->value) + "," +
                    format_number(result->error_estimate);
        else
            line += csv_field(method) + "," + std::string(kDivergesMarker) + "," + std::string(kDivergesMarker);
        return line;
    }
};

inline constexpr std::string_view kOutputHeader = "function,p,q,r,method,value,error_estimate";

/// Printed claims whose measured outcome disagrees with the printed statement.
inline bool is_erratum(const ClaimReport& rep)
{
    return rep.kind == ClaimKind::printed_claim &&
           (rep.status == Status::contradicted || rep.status == Status::sign_reversed);
}

inline int verify_exit_code(const std::vector<ClaimReport>& reports)
{
    const bool any_fail =
        std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.status == Status::fails; });
    return any_fail ? 1 : 0;
}

namespace detail {

inline std::string_view kind_label(ClaimKind k) { return k == ClaimKind::printed_claim ? "printed" : "invariant"; }

inline std::string witness_text(const ClaimReport& rep)
{
    if (!rep.witness) return "-";
    return rep.witness->point + " (margin " + format_number(rep.witness->margin) + ")";
}

} // namespace detail

inline std::string render_text(const std::vector<ClaimReport>& reports)
{
    std::string out = "CLAIMS\n";
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& rep : reports) {
        ++counts[static_cast<int>(rep.status)];
        out += "  " + rep.claim_id + "  [" + std::string(to_string(rep.status)) + "]  " +
               std::string(detail::kind_label(rep.kind)) + "\n";
        out += "    location:  " + rep.location + "\n";
        out += "    statement: " + rep.statement + "\n";
        out += "    points: " + std::to_string(rep.points_checked) + " checked, " +
               std::to_string(rep.points_indeterminate) + " indeterminate; min margin " +
               format_number(rep.min_margin) + "\n";
        out += "    witness: " + detail::witness_text(rep) + "\n";
        if (!rep.detail.empty()) out += "    detail: " + rep.detail + "\n";
    }
    out += "\nERRATA\n";
    bool any = false;
    for (const auto& rep : reports) {
        if (!is_erratum(rep)) continue;
        any = true;
        out += "  " + rep.claim_id + "  [" + std::string(to_string(rep.status)) + "]  at " + rep.location + "\n";
        out += "    printed:  " + rep.statement + "\n";
        out += "    measured: " + (rep.detail.empty() ? std::string("-") : rep.detail) + "\n";
        out += "    witness:  " + detail::witness_text(rep) + "\n";
    }
    if (!any) out += "  (none)\n";
    out += "\nSUMMARY holds=" + std::to_string(counts[0]) + " fails=" + std::to_string(counts[1]) +
           " sign-reversed=" + std::to_string(counts[2]) + " contradicted=" + std::to_string(counts[3]) +
           " indeterminate=" + std::to_string(counts[4]) + "\n";
    return out;
}

inline std::string render_csv(const std::vector<ClaimReport>& reports)
{
    std::string out = "claim_id,kind,status,errata,location,statement,points_checked,points_indeterminate,"
                      "min_margin,witness_point,witness_margin,detail\n";
    for (const auto& rep : reports) {
        out += csv_field(rep.claim_id) + "," + std::string(detail::kind_label(rep.kind)) + "," +
               std::string(to_string(rep.status)) + "," + (is_erratum(rep) ? "yes" : "no") + "," +
               csv_field(rep.location) + "," + csv_field(rep.statement) + "," + std::to_string(rep.points_checked) +
               "," + std::to_string(rep.points_indeterminate) + "," + format_number(rep.min_margin) + "," +
               (rep.witness ? csv_field(rep.witness->point) + "," + format_number(rep.witness->margin) : ",") + "," +
               csv_field(rep.detail) + "\n";
    }
    return out;
}

} // namespace pqell

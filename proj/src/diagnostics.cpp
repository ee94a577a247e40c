#include "extragrad/diagnostics.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace extragrad {

const char* to_string(TerminalReason r) {
    switch (r) {
        case TerminalReason::residual: return "residual";
        case TerminalReason::stall: return "stall";
        case TerminalReason::max_iterations: return "max_iterations";
        case TerminalReason::aborted_nonfinite: return "aborted_nonfinite";
    }
    return "unknown";
}

double residual_fixed_point(const Vector& x, const Nonexpansive& T) {
    return distance(x, apply_T(T, x));
}

double residual_vi(const Vector& x, const ConvexSet& C, const IsmOperator& A, double lambda_bar) {
    if (!(lambda_bar > 0.0)) throw ContractViolation("residual_vi: lambda_bar must be > 0");
    const Vector step = combine(1.0, x, -lambda_bar, apply_ism(A, x));
    return distance(x, C.project(step));
}

AuditReport check_fejer(const Trace& trace, const Vector& z, const Tolerance& tol) {
    tol.validate();
    if (trace.records.empty()) throw ContractViolation("check_fejer: empty trace");
    AuditAccumulator acc("fejer monotonicity", tol.eps_invariant);
    for (std::size_t i = 1; i < trace.records.size(); ++i) {
        const auto& prev = trace.records[i - 1];
        const auto& cur = trace.records[i];
        const double margin = distance(prev.x, z) - distance(cur.x, z);
        acc.observe(-margin / (1.0 + distance(prev.x, z)), prev.x, cur.x, cur.n);
    }
    if (trace.records.size() == 1) acc.observe(0.0, trace.records[0].x, trace.records[0].x, 0);
    return acc.finish();
}

double project_onto_solution_estimate(const Trace& trace, const Vector& z) {
    if (trace.records.empty()) throw ContractViolation("project_onto_solution_estimate: empty trace");
    return distance(trace.records.back().x, z);
}

namespace {

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) out << format_real(*v);
}

}  // namespace

void write_trace_csv(const Trace& trace, std::ostream& out) {
    out << "n,resid_fix,resid_vi,step_norm,dist_known,fejer_margin\n";
    for (const auto& r : trace.records) {
        out << r.n << ',' << format_real(r.resid_fix) << ',' << format_real(r.resid_vi) << ','
            << format_real(r.step_norm) << ',';
        put_optional(out, r.dist_known);
        out << ',';
        put_optional(out, r.fejer_margin);
        out << '\n';
    }
}

std::string trace_csv_string(const Trace& trace) {
    std::ostringstream ss;
    write_trace_csv(trace, ss);
    return ss.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double_strict(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ContractViolation("parse_trace_csv: malformed real '" + s + "'");
    return v;
}

}  // namespace

std::vector<TraceCsvRow> parse_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ContractViolation("parse_trace_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,resid_fix,resid_vi,step_norm,dist_known,fejer_margin")
        throw ContractViolation("parse_trace_csv: unexpected header '" + line + "'");

    std::vector<TraceCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 6)
            throw ContractViolation("parse_trace_csv: expected 6 fields, got " +
                                    std::to_string(fields.size()));
        TraceCsvRow row;
        row.n = static_cast<long>(parse_double_strict(fields[0]));
        row.resid_fix = parse_double_strict(fields[1]);
        row.resid_vi = parse_double_strict(fields[2]);
        row.step_norm = parse_double_strict(fields[3]);
        if (!fields[4].empty()) row.dist_known = parse_double_strict(fields[4]);
        if (!fields[5].empty()) row.fejer_margin = parse_double_strict(fields[5]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace extragrad

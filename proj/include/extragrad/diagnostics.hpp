#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extragrad/audit.hpp"
#include "extragrad/core.hpp"
#include "extragrad/operators.hpp"
#include "extragrad/sets.hpp"

namespace extragrad {

enum class TerminalReason { residual, stall, max_iterations, aborted_nonfinite };

const char* to_string(TerminalReason r);

/// Per-iteration audit row. The gap_* fields hold the extragradient stage
/// distances ||x-t||, ||x-y||, ||x-Tt|| when the scheme has those stages;
/// they stay in memory and are not part of the CSV contract.
struct TraceRecord {
    long n = 0;
    Vector x;
    double resid_fix = 0.0;  // ||x - Tx||
    double resid_vi = 0.0;   // ||x - P_C(x - lambda_bar A x)||
    double step_norm = 0.0;  // ||x_n - x_{n-1}||, 0 at n = 0
    std::optional<double> dist_known;   // ||x - z|| when z configured
    std::optional<double> fejer_margin; // ||x_{n-1}-z|| - ||x_n-z||, n >= 1
    std::optional<double> gap_t, gap_y, gap_tt;
};

struct Trace {
    std::vector<TraceRecord> records;
    TerminalReason terminal_reason = TerminalReason::max_iterations;
    std::string config_fingerprint;
    // Worst normalized margin of the per-iteration contraction inequality
    //   ||t_n-z||^2 <= ||x_n-z||^2 + lambda_n(lambda_n-2 alpha)||Ax_n-Az||^2,
    // tracked only when a known solution is configured.
    std::optional<double> step1_min_margin;
    long step1_worst_index = -1;

    const TraceRecord& final_record() const { return records.back(); }
    long iterations() const { return records.empty() ? 0 : records.back().n; }
};

double residual_fixed_point(const Vector& x, const Nonexpansive& T);
double residual_vi(const Vector& x, const ConvexSet& C, const IsmOperator& A, double lambda_bar);

// Fejér monotonicity of the recorded trajectory towards z:
// pass iff fejer_margin >= -eps_invariant * (1 + ||x_{n-1}-z||) at every n >= 1.
AuditReport check_fejer(const Trace& trace, const Vector& z, const Tolerance& tol = Tolerance{});

// Distance of the terminal iterate to a known singleton solution set {z}.
double project_onto_solution_estimate(const Trace& trace, const Vector& z);

// CSV: header `n,resid_fix,resid_vi,step_norm,dist_known,fejer_margin`,
// one row per record, missing optionals empty, 17 significant digits.
void write_trace_csv(const Trace& trace, std::ostream& out);
std::string trace_csv_string(const Trace& trace);

struct TraceCsvRow {
    long n = 0;
    double resid_fix = 0.0, resid_vi = 0.0, step_norm = 0.0;
    std::optional<double> dist_known, fejer_margin;
};

// Strict parser for the format above; throws ContractViolation on any
// header/shape mismatch.
std::vector<TraceCsvRow> parse_trace_csv(std::istream& in);

}  // namespace extragrad

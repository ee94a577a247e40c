#pragma once

#include <optional>

#include "extragrad/diagnostics.hpp"
#include "extragrad/operators.hpp"
#include "extragrad/problem.hpp"
#include "extragrad/schedule.hpp"
#include "extragrad/sets.hpp"

namespace extragrad {

struct IterationState {
    long n = 0;
    Vector x;
    std::optional<Vector> y, t;  // auxiliary points of the last step

    static IterationState start(Vector x0) { return {0, std::move(x0), {}, {}}; }
};

// One iteration of each scheme. All steppers increment n by exactly one
// and record the stage points they produce.

// t = P_C(x - lambda A x); y = alpha x + (1-alpha) T t; x+ = T P_C(y - lambda A y)
IterationState step_ko(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& T, double lambda_n, double alpha_n);

// x+ = alpha x + (1-alpha) T P_C(x - lambda A x)
IterationState step_tt(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& T, double lambda_n, double alpha_n);

// y = P_C(x - lambda A x); x+ = alpha x + (1-alpha) S P_C(x - lambda A y).
// literal_form drops the A in the second stage (x - lambda y), the way the
// recurrence is sometimes printed; kept for side-by-side comparison.
IterationState step_nt(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& S_map, double lambda_n, double alpha_n,
                       bool literal_form = false);

// y = alpha x + (1-alpha) T x; x+ = T y
IterationState step_picard_mann(const IterationState& s, const Nonexpansive& T, double alpha_n);

// x+ = alpha x + (1-alpha) T x
IterationState step_mann(const IterationState& s, const Nonexpansive& T, double alpha_n);

// y = alpha x + (1-alpha) T x; x+ = alpha x + (1-alpha) T y
IterationState step_ishikawa(const IterationState& s, const Nonexpansive& T, double alpha_n);

// t = J_r(x - lambda A x); y = alpha x + (1-alpha) t; x+ = J_r(y - lambda A y)
IterationState step_resolvent_ko(const IterationState& s, const MaximalMonotone& B,
                                 const IsmOperator& A, double r, double lambda_n, double alpha_n);

// inner(v) = (1-lambda) v + lambda S v;
// y = alpha x + (1-alpha) T inner(x); x+ = T inner(y).
// Identical to step_ko with A = I - S on the whole space.
IterationState step_pseudo_ko(const IterationState& s, const Nonexpansive& T,
                              const StrictPseudocontraction& S, double lambda_n, double alpha_n);

// y = alpha x + (1-alpha) T(x - lambda A x); x+ = T(y - lambda A y)
IterationState step_resolvent_free(const IterationState& s, const IsmOperator& A,
                                   const Nonexpansive& T, double lambda_n, double alpha_n);

// Drives cfg.scheme (or an explicit override) from cfg.x0 until the
// stopping rule fires, recording one TraceRecord per visited iterate.
// Throws ContractViolation when validate_problem rejects the combination.
Trace run(const ProblemConfig& cfg);
Trace run(const ProblemConfig& cfg, SchemeKind scheme);

}  // namespace extragrad

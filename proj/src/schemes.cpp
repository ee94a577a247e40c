#include "extragrad/schemes.hpp"

#include <cmath>
#include <functional>

namespace extragrad {

namespace {

// x - lambda A x
Vector forward_step(const Vector& x, const IsmOperator& A, double lambda) {
    return combine(1.0, x, -lambda, apply_ism(A, x));
}

}  // namespace

IterationState step_ko(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& T, double lambda_n, double alpha_n) {
    Vector t = C.project(forward_step(s.x, A, lambda_n));
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, t));
    Vector next = apply_T(T, C.project(forward_step(y, A, lambda_n)));
    return {s.n + 1, std::move(next), std::move(y), std::move(t)};
}

IterationState step_tt(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& T, double lambda_n, double alpha_n) {
    Vector t = C.project(forward_step(s.x, A, lambda_n));
    Vector next = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, t));
    return {s.n + 1, std::move(next), std::nullopt, std::move(t)};
}

IterationState step_nt(const IterationState& s, const ConvexSet& C, const IsmOperator& A,
                       const Nonexpansive& S_map, double lambda_n, double alpha_n,
                       bool literal_form) {
    Vector t = C.project(forward_step(s.x, A, lambda_n));
    const Vector second = literal_form ? combine(1.0, s.x, -lambda_n, t)
                                       : combine(1.0, s.x, -lambda_n, apply_ism(A, t));
    Vector next = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(S_map, C.project(second)));
    return {s.n + 1, std::move(next), std::nullopt, std::move(t)};
}

IterationState step_picard_mann(const IterationState& s, const Nonexpansive& T, double alpha_n) {
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, s.x));
    Vector next = apply_T(T, y);
    return {s.n + 1, std::move(next), std::move(y), std::nullopt};
}

IterationState step_mann(const IterationState& s, const Nonexpansive& T, double alpha_n) {
    Vector next = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, s.x));
    return {s.n + 1, std::move(next), std::nullopt, std::nullopt};
}

IterationState step_ishikawa(const IterationState& s, const Nonexpansive& T, double alpha_n) {
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, s.x));
    Vector next = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, y));
    return {s.n + 1, std::move(next), std::move(y), std::nullopt};
}

IterationState step_resolvent_ko(const IterationState& s, const MaximalMonotone& B,
                                 const IsmOperator& A, double r, double lambda_n, double alpha_n) {
    Vector t = resolvent(B, r, forward_step(s.x, A, lambda_n));
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, t);
    Vector next = resolvent(B, r, forward_step(y, A, lambda_n));
    return {s.n + 1, std::move(next), std::move(y), std::move(t)};
}

IterationState step_pseudo_ko(const IterationState& s, const Nonexpansive& T,
                              const StrictPseudocontraction& S, double lambda_n, double alpha_n) {
    const auto relax = [&](const Vector& v) {
        return combine(1.0 - lambda_n, v, lambda_n, apply_strict(S, v));
    };
    Vector t = relax(s.x);
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, t));
    Vector next = apply_T(T, relax(y));
    return {s.n + 1, std::move(next), std::move(y), std::move(t)};
}

IterationState step_resolvent_free(const IterationState& s, const IsmOperator& A,
                                   const Nonexpansive& T, double lambda_n, double alpha_n) {
    Vector t = forward_step(s.x, A, lambda_n);
    Vector y = combine(alpha_n, s.x, 1.0 - alpha_n, apply_T(T, t));
    Vector next = apply_T(T, forward_step(y, A, lambda_n));
    return {s.n + 1, std::move(next), std::move(y), std::move(t)};
}

namespace {

std::string join_violations(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

bool scheme_uses_lambda(SchemeKind k) {
    return k != SchemeKind::picard_mann && k != SchemeKind::mann && k != SchemeKind::ishikawa;
}

bool scheme_projects_start(SchemeKind k) {
    return k == SchemeKind::ko || k == SchemeKind::ko_not || k == SchemeKind::tt ||
           k == SchemeKind::nt;
}

}  // namespace

Trace run(const ProblemConfig& cfg) { return run(cfg, cfg.scheme); }

Trace run(const ProblemConfig& cfg, SchemeKind kind) {
    const auto violations = validate_problem(cfg, kind);
    if (!violations.empty())
        throw ContractViolation("run(" + std::string(to_string(kind)) +
                                "): " + join_violations(violations));

    const Nonexpansive identity = Nonexpansive::identity();

    // fixed-point map used for resid_fix (and the Tt gap)
    std::function<Vector(const Vector&)> fix_map;
    switch (kind) {
        case SchemeKind::ko_not:
            fix_map = [](const Vector& v) { return v; };
            break;
        case SchemeKind::resolvent_ko:
            fix_map = [&cfg](const Vector& v) { return resolvent(*cfg.operator_B, cfg.resolvent_r, v); };
            break;
        default:
            fix_map = [&cfg](const Vector& v) { return apply_T(*cfg.map_T, v); };
            break;
    }

    // effective (C, A) feeding the VI residual
    std::optional<ConvexSet> C_eff;
    std::optional<IsmOperator> A_eff;
    switch (kind) {
        case SchemeKind::ko:
        case SchemeKind::ko_not:
        case SchemeKind::tt:
        case SchemeKind::nt:
            C_eff = cfg.set;
            A_eff = cfg.operator_A;
            break;
        case SchemeKind::resolvent_ko:
        case SchemeKind::resolvent_free:
            C_eff = ConvexSet::whole_space(cfg.dimension);
            A_eff = cfg.operator_A;
            break;
        case SchemeKind::pseudo_ko:
            C_eff = ConvexSet::whole_space(cfg.dimension);
            A_eff = ism_from_strict_pseudocontraction(*cfg.map_S);
            break;
        default:
            if (cfg.set && cfg.operator_A && cfg.lambda) {
                C_eff = cfg.set;
                A_eff = cfg.operator_A;
            }
            break;
    }
    const bool has_vi = C_eff && A_eff && cfg.lambda;
    const double lambda_bar = has_vi ? 0.5 * (cfg.lambda->low() + cfg.lambda->high()) : 0.0;

    using Stepper = std::function<IterationState(const IterationState&, double, double)>;
    Stepper stepper;
    switch (kind) {
        case SchemeKind::ko:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_ko(s, *cfg.set, *cfg.operator_A, *cfg.map_T, lam, alf);
            };
            break;
        case SchemeKind::ko_not:
            stepper = [&cfg, &identity](const IterationState& s, double lam, double alf) {
                return step_ko(s, *cfg.set, *cfg.operator_A, identity, lam, alf);
            };
            break;
        case SchemeKind::tt:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_tt(s, *cfg.set, *cfg.operator_A, *cfg.map_T, lam, alf);
            };
            break;
        case SchemeKind::nt:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_nt(s, *cfg.set, *cfg.operator_A, *cfg.map_T, lam, alf, cfg.nt_literal);
            };
            break;
        case SchemeKind::picard_mann:
            stepper = [&cfg](const IterationState& s, double, double alf) {
                return step_picard_mann(s, *cfg.map_T, alf);
            };
            break;
        case SchemeKind::mann:
            stepper = [&cfg](const IterationState& s, double, double alf) {
                return step_mann(s, *cfg.map_T, alf);
            };
            break;
        case SchemeKind::ishikawa:
            stepper = [&cfg](const IterationState& s, double, double alf) {
                return step_ishikawa(s, *cfg.map_T, alf);
            };
            break;
        case SchemeKind::resolvent_ko:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_resolvent_ko(s, *cfg.operator_B, *cfg.operator_A, cfg.resolvent_r, lam,
                                         alf);
            };
            break;
        case SchemeKind::pseudo_ko:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_pseudo_ko(s, *cfg.map_T, *cfg.map_S, lam, alf);
            };
            break;
        case SchemeKind::resolvent_free:
            stepper = [&cfg](const IterationState& s, double lam, double alf) {
                return step_resolvent_free(s, *cfg.operator_A, *cfg.map_T, lam, alf);
            };
            break;
    }

    Trace trace;
    trace.config_fingerprint =
        fingerprint(describe_problem(cfg) + ";run_scheme=" + to_string(kind));

    const std::optional<double> alpha_eff = effective_alpha(cfg, kind);
    const std::optional<Vector>& z = cfg.known_solution;
    std::optional<Vector> Az_eff;
    if (z && A_eff) Az_eff = apply_ism(*A_eff, *z);

    Vector x = (cfg.set && scheme_projects_start(kind)) ? cfg.set->project(cfg.x0) : cfg.x0;
    long n = 0;
    double step_norm = 0.0;
    std::optional<double> prev_dist;
    double step1_min = 0.0;
    bool step1_any = false;

    for (;;) {
        const double lam = scheme_uses_lambda(kind) ? cfg.lambda->at(n) : 0.0;
        const double alf = cfg.alpha_n->at(n);
        const IterationState next = stepper({n, x, {}, {}}, lam, alf);

        TraceRecord rec;
        rec.n = n;
        rec.x = x;
        rec.resid_fix = distance(x, fix_map(x));
        rec.resid_vi = has_vi ? residual_vi(x, *C_eff, *A_eff, lambda_bar) : 0.0;
        rec.step_norm = step_norm;
        if (z) {
            rec.dist_known = distance(x, *z);
            if (n >= 1 && prev_dist) rec.fejer_margin = *prev_dist - *rec.dist_known;
            prev_dist = rec.dist_known;
        }
        if (next.t) {
            rec.gap_t = distance(x, *next.t);
            rec.gap_tt = distance(x, fix_map(*next.t));
        }
        if (next.y) rec.gap_y = distance(x, *next.y);
        trace.records.push_back(rec);

        // margin of the per-iteration contraction inequality, normalized
        if (z && next.t && alpha_eff && Az_eff) {
            const double dxz = *rec.dist_known;
            const double dtz = distance(*next.t, *z);
            const double da = distance(apply_ism(*A_eff, x), *Az_eff);
            const double margin =
                (dxz * dxz + lam * (lam - 2.0 * *alpha_eff) * da * da - dtz * dtz) /
                (1.0 + dxz * dxz);
            if (!step1_any || margin < step1_min) {
                step1_min = margin;
                trace.step1_worst_index = n;
                step1_any = true;
            }
        }

        if (rec.resid_fix + rec.resid_vi <= cfg.stop.residual_threshold) {
            trace.terminal_reason = TerminalReason::residual;
            break;
        }
        if (n >= 1 && step_norm <= cfg.stop.stall_threshold) {
            trace.terminal_reason = TerminalReason::stall;
            break;
        }
        if (n >= cfg.stop.max_iterations) {
            trace.terminal_reason = TerminalReason::max_iterations;
            break;
        }
        if (!is_finite(next.x) || (next.y && !is_finite(*next.y)) ||
            (next.t && !is_finite(*next.t))) {
            trace.terminal_reason = TerminalReason::aborted_nonfinite;
            break;
        }

        step_norm = distance(next.x, x);
        x = next.x;
        ++n;
    }

    if (step1_any) trace.step1_min_margin = step1_min;
    return trace;
}

}  // namespace extragrad

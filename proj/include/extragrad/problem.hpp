#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extragrad/core.hpp"
#include "extragrad/operators.hpp"
#include "extragrad/schedule.hpp"
#include "extragrad/sets.hpp"

namespace extragrad {

enum class SchemeKind {
    ko,             // two-stage extragradient with T at both stages
    ko_not,         // same with T = I (the corollary configuration)
    tt,             // one-projection averaged scheme
    nt,             // extragradient with operator re-evaluation at y_n
    picard_mann,    // x+ = T(alpha x + (1-alpha) T x)
    resolvent_ko,   // projections replaced by the resolvent J_r
    pseudo_ko,      // relaxation of a strict pseudocontraction inside T
    resolvent_free, // whole-space variant, T composed with gradient steps
    mann,           // baseline
    ishikawa        // baseline
};

const char* to_string(SchemeKind k);
std::optional<SchemeKind> scheme_from_string(const std::string& name);
std::vector<SchemeKind> all_scheme_kinds();

struct StoppingRule {
    long max_iterations = 10000;       // >= 1
    double residual_threshold = 1e-8;  // > 0
    double stall_threshold = 0.0;      // >= 0, on ||x_{n+1} - x_n||

    void validate() const;

    friend bool operator==(const StoppingRule&, const StoppingRule&) = default;
};

/// Everything a run needs: the operator slots the scheme reads, the
/// schedules, the start point and the stopping rule. Slots not used by
/// the chosen scheme may stay empty.
struct ProblemConfig {
    std::size_t dimension = 0;
    std::optional<ConvexSet> set;
    std::optional<IsmOperator> operator_A;
    std::optional<Nonexpansive> map_T;
    std::optional<StrictPseudocontraction> map_S;
    std::optional<MaximalMonotone> operator_B;
    double resolvent_r = 1.0;
    SchemeKind scheme = SchemeKind::ko;
    std::optional<Schedule> lambda;
    std::optional<Schedule> alpha_n;
    bool nt_literal = false;  // run the printed (unsubstituted) nt form
    Vector x0;
    StoppingRule stop;
    std::optional<Vector> known_solution;
    std::uint64_t seed = 0;
};

// The alpha that the lambda-range hypothesis is checked against:
// operator_A's claimed constant, or (1-k)/2 when the scheme derives its
// operator from map_S.
std::optional<double> effective_alpha(const ProblemConfig& cfg, SchemeKind kind);

// Slot/schedule/dimension validation for running `kind` on this problem.
// Returns named violations; empty list means runnable.
std::vector<std::string> validate_problem(const ProblemConfig& cfg, SchemeKind kind);

std::string describe_problem(const ProblemConfig& cfg);
std::string fingerprint(const std::string& text);  // FNV-1a, hex

}  // namespace extragrad

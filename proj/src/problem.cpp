#include "extragrad/problem.hpp"

#include <cstdio>
#include <sstream>

namespace extragrad {

const char* to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::ko: return "ko";
        case SchemeKind::ko_not: return "ko_not";
        case SchemeKind::tt: return "tt";
        case SchemeKind::nt: return "nt";
        case SchemeKind::picard_mann: return "picard_mann";
        case SchemeKind::resolvent_ko: return "resolvent_ko";
        case SchemeKind::pseudo_ko: return "pseudo_ko";
        case SchemeKind::resolvent_free: return "resolvent_free";
        case SchemeKind::mann: return "mann";
        case SchemeKind::ishikawa: return "ishikawa";
    }
    return "unknown";
}

std::vector<SchemeKind> all_scheme_kinds() {
    return {SchemeKind::ko,          SchemeKind::ko_not,       SchemeKind::tt,
            SchemeKind::nt,          SchemeKind::picard_mann,  SchemeKind::resolvent_ko,
            SchemeKind::pseudo_ko,   SchemeKind::resolvent_free, SchemeKind::mann,
            SchemeKind::ishikawa};
}

std::optional<SchemeKind> scheme_from_string(const std::string& name) {
    for (SchemeKind k : all_scheme_kinds())
        if (name == to_string(k)) return k;
    return std::nullopt;
}

void StoppingRule::validate() const {
    if (max_iterations < 1) throw ContractViolation("StoppingRule: max_iterations >= 1");
    if (!(residual_threshold > 0.0))
        throw ContractViolation("StoppingRule: residual_threshold > 0");
    if (!(stall_threshold >= 0.0)) throw ContractViolation("StoppingRule: stall_threshold >= 0");
}

namespace {

bool needs_set(SchemeKind k) {
    return k == SchemeKind::ko || k == SchemeKind::ko_not || k == SchemeKind::tt ||
           k == SchemeKind::nt;
}
bool needs_A(SchemeKind k) {
    return needs_set(k) || k == SchemeKind::resolvent_ko || k == SchemeKind::resolvent_free;
}
bool needs_T(SchemeKind k) {
    switch (k) {
        case SchemeKind::ko:
        case SchemeKind::tt:
        case SchemeKind::nt:
        case SchemeKind::picard_mann:
        case SchemeKind::pseudo_ko:
        case SchemeKind::resolvent_free:
        case SchemeKind::mann:
        case SchemeKind::ishikawa: return true;
        default: return false;
    }
}
bool needs_lambda(SchemeKind k) {
    return k != SchemeKind::picard_mann && k != SchemeKind::mann && k != SchemeKind::ishikawa;
}

void check_dim(std::optional<std::size_t> hint, std::size_t dim, const char* slot,
               std::vector<std::string>& out) {
    if (hint && *hint != dim) out.push_back(std::string(slot) + " dimension mismatch");
}

}  // namespace

std::optional<double> effective_alpha(const ProblemConfig& cfg, SchemeKind kind) {
    if (kind == SchemeKind::pseudo_ko) {
        if (!cfg.map_S) return std::nullopt;
        return (1.0 - cfg.map_S->k_claimed()) / 2.0;
    }
    if (needs_A(kind) && cfg.operator_A) return cfg.operator_A->alpha_claimed();
    return std::nullopt;
}

std::vector<std::string> validate_problem(const ProblemConfig& cfg, SchemeKind kind) {
    std::vector<std::string> v;
    if (cfg.dimension < 1) v.push_back("dimension must be >= 1");
    if (cfg.x0.dim() != cfg.dimension) v.push_back("x0 dimension mismatch");
    if (!is_finite(cfg.x0)) v.push_back("x0 must be finite");

    if (cfg.stop.max_iterations < 1) v.push_back("stop.max_iterations must be >= 1");
    if (!(cfg.stop.residual_threshold > 0.0)) v.push_back("stop.residual_threshold must be > 0");
    if (!(cfg.stop.stall_threshold >= 0.0)) v.push_back("stop.stall_threshold must be >= 0");

    if (needs_set(kind) && !cfg.set) v.push_back("missing set");
    if (needs_A(kind) && !cfg.operator_A) v.push_back("missing operator_A");
    if (needs_T(kind) && !cfg.map_T) v.push_back("missing map_T");
    if (kind == SchemeKind::pseudo_ko && !cfg.map_S) v.push_back("missing map_S");
    if (kind == SchemeKind::resolvent_ko) {
        if (!cfg.operator_B) v.push_back("missing operator_B");
        if (!(cfg.resolvent_r > 0.0)) v.push_back("resolvent r must be > 0");
    }
    if (!cfg.alpha_n) v.push_back("missing alpha_n schedule");
    if (needs_lambda(kind) && !cfg.lambda) v.push_back("missing lambda schedule");

    if (cfg.set) check_dim(cfg.set->dim(), cfg.dimension, "set", v);
    if (cfg.operator_A) check_dim(cfg.operator_A->dim_hint(), cfg.dimension, "operator_A", v);
    if (cfg.map_T) check_dim(cfg.map_T->dim_hint(), cfg.dimension, "map_T", v);
    if (cfg.map_S) check_dim(cfg.map_S->dim_hint(), cfg.dimension, "map_S", v);
    if (cfg.operator_B) check_dim(cfg.operator_B->dim_hint(), cfg.dimension, "operator_B", v);
    if (cfg.known_solution && cfg.known_solution->dim() != cfg.dimension)
        v.push_back("known_solution dimension mismatch");

    if (cfg.alpha_n) {
        if (needs_lambda(kind) && cfg.lambda) {
            if (const auto alpha = effective_alpha(cfg, kind)) {
                for (auto& s : validate_schedule(*cfg.lambda, *cfg.alpha_n, *alpha))
                    v.push_back(std::move(s));
            }
        } else {
            for (auto& s : validate_alpha_schedule(*cfg.alpha_n)) v.push_back(std::move(s));
        }
    }
    return v;
}

namespace {

void describe_vector(std::ostringstream& out, const Vector& v) {
    out << '[';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out << ' ';
        out << format_real(v[i]);
    }
    out << ']';
}

void describe_matrix(std::ostringstream& out, const Matrix& m) {
    out << '[';
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out << ' ' << format_real(m(i, j));
    out << ']';
}

void describe_set(std::ostringstream& out, const ConvexSet& set) {
    out << set.kind_name();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Box>) {
                describe_vector(out, s.lo);
                describe_vector(out, s.hi);
            } else if constexpr (std::is_same_v<T, Ball>) {
                describe_vector(out, s.center);
                out << format_real(s.radius);
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                describe_vector(out, s.normal);
                out << format_real(s.offset);
            } else {
                out << s.dim;
            }
        },
        set.variant());
}

void describe_T(std::ostringstream& out, const Nonexpansive& t) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NIdentity>) {
                out << "identity";
            } else if constexpr (std::is_same_v<T, NProjectionOnto>) {
                out << "projection:";
                describe_set(out, s.set);
            } else if constexpr (std::is_same_v<T, NContraction>) {
                out << "contraction:" << format_real(s.c);
                describe_vector(out, s.fixed_point);
            } else if constexpr (std::is_same_v<T, NRotation>) {
                out << "rotation:" << format_real(s.angle);
            } else {
                out << "average:" << format_real(s.weight) << '(';
                describe_T(out, *s.inner);
                out << ')';
            }
        },
        t.variant());
}

void describe_S(std::ostringstream& out, const StrictPseudocontraction& s) {
    out << "k=" << format_real(s.k_claimed()) << ':';
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ScaledNegation>) {
                out << "scaled_negation:" << format_real(v.s);
            } else {
                out << "nonexpansive(";
                describe_T(out, v.map);
                out << ')';
            }
        },
        s.variant());
}

void describe_A(std::ostringstream& out, const IsmOperator& a) {
    out << "alpha=" << format_real(a.alpha_claimed()) << ':';
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IsmZero>) {
                out << "zero";
            } else if constexpr (std::is_same_v<T, ShiftResidual>) {
                out << "shift_residual";
                describe_vector(out, v.target);
            } else if constexpr (std::is_same_v<T, AffineGradient>) {
                out << "affine_gradient";
                describe_matrix(out, v.M);
                describe_vector(out, v.q);
            } else if constexpr (std::is_same_v<T, FromPseudocontraction>) {
                out << "from_pseudocontraction(";
                describe_S(out, v.s);
                out << ')';
            } else {
                out << "rotation90";
            }
        },
        a.variant());
}

void describe_B(std::ostringstream& out, const MaximalMonotone& b) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalCone>) {
                out << "normal_cone:";
                describe_set(out, v.set);
            } else if constexpr (std::is_same_v<T, AbsSubdifferential>) {
                out << "abs_subdifferential";
            } else {
                out << "linear_monotone";
                describe_matrix(out, v.M);
            }
        },
        b.variant());
}

void describe_schedule(std::ostringstream& out, const Schedule& s) {
    if (s.kind() == Schedule::Kind::constant) {
        out << "const:" << format_real(s.constant_value());
    } else {
        out << "table:";
        for (double v : s.table_values()) out << format_real(v) << ' ';
    }
    out << "bounds[" << format_real(s.low()) << ' ' << format_real(s.high()) << ']';
}

}  // namespace

std::string describe_problem(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "dim=" << cfg.dimension << ";scheme=" << to_string(cfg.scheme) << ";";
    if (cfg.set) {
        out << "set=";
        describe_set(out, *cfg.set);
        out << ';';
    }
    if (cfg.operator_A) {
        out << "A=";
        describe_A(out, *cfg.operator_A);
        out << ';';
    }
    if (cfg.map_T) {
        out << "T=";
        describe_T(out, *cfg.map_T);
        out << ';';
    }
    if (cfg.map_S) {
        out << "S=";
        describe_S(out, *cfg.map_S);
        out << ';';
    }
    if (cfg.operator_B) {
        out << "B=";
        describe_B(out, *cfg.operator_B);
        out << ";r=" << format_real(cfg.resolvent_r) << ';';
    }
    if (cfg.lambda) {
        out << "lambda=";
        describe_schedule(out, *cfg.lambda);
        out << ';';
    }
    if (cfg.alpha_n) {
        out << "alpha_n=";
        describe_schedule(out, *cfg.alpha_n);
        out << ';';
    }
    if (cfg.nt_literal) out << "nt_literal;";
    out << "x0=";
    describe_vector(out, cfg.x0);
    out << ";stop=" << cfg.stop.max_iterations << '/' << format_real(cfg.stop.residual_threshold)
        << '/' << format_real(cfg.stop.stall_threshold) << ';';
    if (cfg.known_solution) {
        out << "z=";
        describe_vector(out, *cfg.known_solution);
        out << ';';
    }
    out << "seed=" << cfg.seed;
    return out.str();
}

std::string fingerprint(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace extragrad

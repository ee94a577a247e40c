#include "extragrad/config_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace extragrad {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Collected key/value lines plus error sink. `take_*` helpers consume
// keys; whatever stays unconsumed at the end is reported as unknown.
struct ParseCtx {
    std::map<std::string, std::string> kv;
    std::set<std::string> consumed;
    std::vector<std::string> errors;

    bool has(const std::string& key) const { return kv.count(key) > 0; }

    bool has_prefix(const std::string& prefix) const {
        auto it = kv.lower_bound(prefix);
        return it != kv.end() &&
               (it->first == prefix || it->first.rfind(prefix + ".", 0) == 0);
    }

    void fail(const std::string& msg) { errors.push_back(msg); }

    std::optional<std::string> take(const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        consumed.insert(key);
        return it->second;
    }

    std::optional<std::string> require(const std::string& key) {
        auto v = take(key);
        if (!v) fail("missing " + key);
        return v;
    }

    std::optional<double> parse_real(const std::string& key, const std::string& raw) {
        const char* begin = raw.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || trim(end)[0] != '\0') {
            fail(key + ": malformed real '" + raw + "'");
            return std::nullopt;
        }
        return v;
    }

    std::optional<double> take_real(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        return parse_real(key, *raw);
    }

    std::optional<long> take_int(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        const char* begin = raw->c_str();
        char* end = nullptr;
        const long v = std::strtol(begin, &end, 10);
        if (end == begin || trim(end)[0] != '\0') {
            fail(key + ": malformed integer '" + *raw + "'");
            return std::nullopt;
        }
        return v;
    }

    std::optional<bool> take_bool(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        if (*raw == "true") return true;
        if (*raw == "false") return false;
        fail(key + ": expected true/false, got '" + *raw + "'");
        return std::nullopt;
    }

    std::optional<double> require_real(const std::string& key) {
        if (!has(key)) {
            fail("missing " + key);
            return std::nullopt;
        }
        return take_real(key);
    }

    std::optional<Vector> require_vector(const std::string& key) {
        if (!has(key)) {
            fail("missing " + key);
            return std::nullopt;
        }
        return take_vector(key);
    }

    std::optional<Matrix> require_matrix(const std::string& key) {
        if (!has(key)) {
            fail("missing " + key);
            return std::nullopt;
        }
        return take_matrix(key);
    }

    std::optional<long> require_int(const std::string& key) {
        if (!has(key)) {
            fail("missing " + key);
            return std::nullopt;
        }
        return take_int(key);
    }

    // [a, b, c]
    std::optional<Vector> parse_vector(const std::string& key, const std::string& raw) {
        const std::string s = trim(raw);
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            fail(key + ": expected [..] vector, got '" + raw + "'");
            return std::nullopt;
        }
        std::vector<double> vals;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                fail(key + ": empty vector component");
                return std::nullopt;
            }
            auto v = parse_real(key, item);
            if (!v) return std::nullopt;
            vals.push_back(*v);
        }
        if (vals.empty()) {
            fail(key + ": empty vector");
            return std::nullopt;
        }
        return Vector(std::move(vals));
    }

    std::optional<Vector> take_vector(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        return parse_vector(key, *raw);
    }

    // [[a, b], [c, d]]
    std::optional<Matrix> take_matrix(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        const std::string s = trim(*raw);
        if (s.size() < 4 || s.front() != '[' || s.back() != ']') {
            fail(key + ": expected [[..],[..]] matrix");
            return std::nullopt;
        }
        std::vector<std::vector<double>> rows;
        std::size_t i = 1;
        while (i < s.size() - 1) {
            while (i < s.size() - 1 &&
                   (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
                ++i;
            if (i >= s.size() - 1) break;
            if (s[i] != '[') {
                fail(key + ": expected '[' starting a matrix row");
                return std::nullopt;
            }
            const std::size_t close = s.find(']', i);
            if (close == std::string::npos) {
                fail(key + ": unterminated matrix row");
                return std::nullopt;
            }
            auto row = parse_vector(key, s.substr(i, close - i + 1));
            if (!row) return std::nullopt;
            rows.emplace_back(row->begin(), row->end());
            i = close + 1;
        }
        if (rows.empty()) {
            fail(key + ": empty matrix");
            return std::nullopt;
        }
        for (const auto& r : rows) {
            if (r.size() != rows.size()) {
                fail(key + ": matrix must be square");
                return std::nullopt;
            }
        }
        return Matrix(std::move(rows));
    }
};

std::optional<ConvexSet> parse_set(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    try {
        if (*kind == "whole" || *kind == "simplex") {
            auto d = ctx.require_int(prefix + ".dim");
            if (!d) return std::nullopt;
            if (*d < 1) {
                ctx.fail(prefix + ".dim must be >= 1");
                return std::nullopt;
            }
            return *kind == "whole" ? ConvexSet::whole_space(static_cast<std::size_t>(*d))
                                    : ConvexSet::simplex(static_cast<std::size_t>(*d));
        }
        if (*kind == "box") {
            auto lo = ctx.require_vector(prefix + ".lo");
            auto hi = ctx.require_vector(prefix + ".hi");
            if (!lo || !hi) return std::nullopt;
            return ConvexSet::box(std::move(*lo), std::move(*hi));
        }
        if (*kind == "ball") {
            auto c = ctx.require_vector(prefix + ".center");
            auto r = ctx.require_real(prefix + ".radius");
            if (!c || !r) return std::nullopt;
            return ConvexSet::ball(std::move(*c), *r);
        }
        if (*kind == "halfspace") {
            auto a = ctx.require_vector(prefix + ".normal");
            auto b = ctx.require_real(prefix + ".offset");
            if (!a || !b) return std::nullopt;
            return ConvexSet::halfspace(std::move(*a), *b);
        }
        ctx.fail(prefix + ".kind: unknown set kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

std::optional<Nonexpansive> parse_nonexpansive(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    try {
        if (*kind == "identity") return Nonexpansive::identity();
        if (*kind == "projection") {
            auto set = parse_set(ctx, prefix + ".set");
            if (!set) return std::nullopt;
            return Nonexpansive::projection_onto(std::move(*set));
        }
        if (*kind == "contraction") {
            auto c = ctx.require_real(prefix + ".c");
            auto fp = ctx.require_vector(prefix + ".fixed_point");
            if (!c || !fp) return std::nullopt;
            return Nonexpansive::contraction(*c, std::move(*fp));
        }
        if (*kind == "rotation") {
            auto a = ctx.require_real(prefix + ".angle");
            if (!a) return std::nullopt;
            return Nonexpansive::rotation(*a);
        }
        if (*kind == "average") {
            auto w = ctx.require_real(prefix + ".weight");
            auto in = parse_nonexpansive(ctx, prefix + ".inner");
            if (!w || !in) return std::nullopt;
            return Nonexpansive::average(std::move(*in), *w);
        }
        ctx.fail(prefix + ".kind: unknown map kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

std::optional<StrictPseudocontraction> parse_strict(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    try {
        if (*kind == "scaled_negation") {
            auto s = ctx.require_real(prefix + ".s");
            if (!s) return std::nullopt;
            if (auto k = ctx.take_real(prefix + ".k"))
                return StrictPseudocontraction::scaled_negation(*s, *k);
            return StrictPseudocontraction::scaled_negation(*s);
        }
        if (*kind == "nonexpansive_as_zero_strict") {
            auto in = parse_nonexpansive(ctx, prefix + ".inner");
            if (!in) return std::nullopt;
            const double k = ctx.take_real(prefix + ".k").value_or(0.0);
            return StrictPseudocontraction::from_nonexpansive(std::move(*in), k);
        }
        ctx.fail(prefix + ".kind: unknown pseudocontraction kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

std::optional<IsmOperator> parse_ism(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    const auto alpha = ctx.take_real(prefix + ".alpha");
    try {
        if (*kind == "zero") return IsmOperator::zero(alpha.value_or(1.0));
        if (*kind == "shift_residual") {
            auto t = ctx.require_vector(prefix + ".target");
            if (!t) return std::nullopt;
            return IsmOperator::shift_residual(std::move(*t), alpha.value_or(1.0));
        }
        if (*kind == "affine_gradient") {
            auto m = ctx.require_matrix(prefix + ".matrix");
            auto q = ctx.require_vector(prefix + ".q");
            if (!m || !q) return std::nullopt;
            if (alpha) return IsmOperator::affine_gradient(std::move(*m), std::move(*q), *alpha);
            return IsmOperator::affine_gradient(std::move(*m), std::move(*q));
        }
        if (*kind == "from_pseudocontraction") {
            auto s = parse_strict(ctx, prefix + ".s");
            if (!s) return std::nullopt;
            IsmOperator a = ism_from_strict_pseudocontraction(*s);
            if (alpha) return IsmOperator(a.variant(), *alpha);
            return a;
        }
        if (*kind == "rotation90") {
            if (!alpha) {
                ctx.fail(prefix + ".alpha is required for rotation90");
                return std::nullopt;
            }
            return IsmOperator::rotation90(*alpha);
        }
        ctx.fail(prefix + ".kind: unknown operator kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

std::optional<MaximalMonotone> parse_monotone(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    try {
        if (*kind == "normal_cone") {
            auto set = parse_set(ctx, prefix + ".set");
            if (!set) return std::nullopt;
            return MaximalMonotone::normal_cone(std::move(*set));
        }
        if (*kind == "abs_subdifferential") return MaximalMonotone::abs_subdifferential();
        if (*kind == "linear_monotone") {
            auto m = ctx.require_matrix(prefix + ".matrix");
            if (!m) return std::nullopt;
            return MaximalMonotone::linear_monotone(std::move(*m));
        }
        ctx.fail(prefix + ".kind: unknown monotone kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

std::optional<Schedule> parse_schedule(ParseCtx& ctx, const std::string& prefix) {
    auto kind = ctx.require(prefix + ".kind");
    if (!kind) return std::nullopt;
    const auto low = ctx.take_real(prefix + ".low");
    const auto high = ctx.take_real(prefix + ".high");
    try {
        if (*kind == "constant") {
            auto v = ctx.require_real(prefix + ".value");
            if (!v) return std::nullopt;
            if (low && high) return Schedule::constant(*v, *low, *high);
            if (low || high) {
                ctx.fail(prefix + ": low/high must be given together");
                return std::nullopt;
            }
            return Schedule::constant(*v);
        }
        if (*kind == "table") {
            auto vals = ctx.require_vector(prefix + ".values");
            if (!vals) return std::nullopt;
            std::vector<double> v(vals->begin(), vals->end());
            if (low && high) return Schedule::table(std::move(v), *low, *high);
            if (low || high) {
                ctx.fail(prefix + ": low/high must be given together");
                return std::nullopt;
            }
            return Schedule::table(std::move(v));
        }
        ctx.fail(prefix + ".kind: unknown schedule kind '" + *kind + "'");
    } catch (const ContractViolation& e) {
        ctx.fail(prefix + ": " + e.what());
    }
    return std::nullopt;
}

}  // namespace

ParseResult parse_config(const std::string& text) {
    ParseCtx ctx;
    std::stringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            ctx.fail("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            ctx.fail("line " + std::to_string(lineno) + ": empty key");
            continue;
        }
        if (!ctx.kv.emplace(key, value).second)
            ctx.fail("duplicate key '" + key + "'");
    }

    ProblemConfig cfg;

    if (auto d = ctx.take_int("dimension")) {
        if (*d < 1) ctx.fail("dimension must be >= 1");
        else cfg.dimension = static_cast<std::size_t>(*d);
    } else {
        ctx.fail("missing dimension");
    }

    if (auto s = ctx.take("scheme")) {
        if (auto k = scheme_from_string(*s)) cfg.scheme = *k;
        else ctx.fail("scheme: unknown scheme '" + *s + "'");
    } else {
        ctx.fail("missing scheme");
    }

    if (ctx.has_prefix("set")) cfg.set = parse_set(ctx, "set");
    if (ctx.has_prefix("operator_A")) cfg.operator_A = parse_ism(ctx, "operator_A");
    if (ctx.has_prefix("map_T")) cfg.map_T = parse_nonexpansive(ctx, "map_T");
    if (ctx.has_prefix("map_S")) cfg.map_S = parse_strict(ctx, "map_S");
    if (ctx.has_prefix("operator_B")) {
        if (auto r = ctx.take_real("operator_B.r")) cfg.resolvent_r = *r;
        cfg.operator_B = parse_monotone(ctx, "operator_B");
    }
    if (ctx.has_prefix("lambda")) cfg.lambda = parse_schedule(ctx, "lambda");
    if (ctx.has_prefix("alpha_n")) cfg.alpha_n = parse_schedule(ctx, "alpha_n");

    if (auto b = ctx.take_bool("nt_literal")) cfg.nt_literal = *b;

    if (auto x0 = ctx.take_vector("x0")) cfg.x0 = std::move(*x0);
    else ctx.fail("missing x0");

    if (auto v = ctx.take_int("stop.max_iterations")) cfg.stop.max_iterations = *v;
    if (auto v = ctx.take_real("stop.residual_threshold")) cfg.stop.residual_threshold = *v;
    if (auto v = ctx.take_real("stop.stall_threshold")) cfg.stop.stall_threshold = *v;

    if (ctx.has("known_solution")) cfg.known_solution = ctx.take_vector("known_solution");
    if (auto s = ctx.take_int("seed")) {
        if (*s < 0) ctx.fail("seed must be >= 0");
        else cfg.seed = static_cast<std::uint64_t>(*s);
    }

    for (const auto& [key, value] : ctx.kv) {
        (void)value;
        if (!ctx.consumed.count(key)) ctx.fail("unknown key '" + key + "'");
    }

    if (ctx.errors.empty()) {
        for (auto& v : validate_problem(cfg, cfg.scheme)) ctx.fail(std::move(v));
    }

    ParseResult result;
    result.errors = std::move(ctx.errors);
    if (result.errors.empty()) result.config = std::move(cfg);
    return result;
}

ParseResult parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.errors.push_back("cannot open config file '" + path + "'");
        return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

std::string render_vector(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += format_real(v[i]);
    }
    return s + "]";
}

std::string render_matrix(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) s += ", ";
            s += format_real(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

void render_set(std::ostringstream& out, const std::string& prefix, const ConvexSet& set) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                out << prefix << ".kind = whole\n" << prefix << ".dim = " << s.dim << "\n";
            } else if constexpr (std::is_same_v<T, Box>) {
                out << prefix << ".kind = box\n"
                    << prefix << ".lo = " << render_vector(s.lo) << "\n"
                    << prefix << ".hi = " << render_vector(s.hi) << "\n";
            } else if constexpr (std::is_same_v<T, Ball>) {
                out << prefix << ".kind = ball\n"
                    << prefix << ".center = " << render_vector(s.center) << "\n"
                    << prefix << ".radius = " << format_real(s.radius) << "\n";
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                out << prefix << ".kind = halfspace\n"
                    << prefix << ".normal = " << render_vector(s.normal) << "\n"
                    << prefix << ".offset = " << format_real(s.offset) << "\n";
            } else {
                out << prefix << ".kind = simplex\n" << prefix << ".dim = " << s.dim << "\n";
            }
        },
        set.variant());
}

void render_nonexpansive(std::ostringstream& out, const std::string& prefix,
                         const Nonexpansive& t) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NIdentity>) {
                out << prefix << ".kind = identity\n";
            } else if constexpr (std::is_same_v<T, NProjectionOnto>) {
                out << prefix << ".kind = projection\n";
                render_set(out, prefix + ".set", s.set);
            } else if constexpr (std::is_same_v<T, NContraction>) {
                out << prefix << ".kind = contraction\n"
                    << prefix << ".c = " << format_real(s.c) << "\n"
                    << prefix << ".fixed_point = " << render_vector(s.fixed_point) << "\n";
            } else if constexpr (std::is_same_v<T, NRotation>) {
                out << prefix << ".kind = rotation\n"
                    << prefix << ".angle = " << format_real(s.angle) << "\n";
            } else {
                out << prefix << ".kind = average\n"
                    << prefix << ".weight = " << format_real(s.weight) << "\n";
                render_nonexpansive(out, prefix + ".inner", *s.inner);
            }
        },
        t.variant());
}

void render_strict(std::ostringstream& out, const std::string& prefix,
                   const StrictPseudocontraction& sp) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScaledNegation>) {
                out << prefix << ".kind = scaled_negation\n"
                    << prefix << ".s = " << format_real(s.s) << "\n";
            } else {
                out << prefix << ".kind = nonexpansive_as_zero_strict\n";
                render_nonexpansive(out, prefix + ".inner", s.map);
            }
        },
        sp.variant());
    out << prefix << ".k = " << format_real(sp.k_claimed()) << "\n";
}

void render_ism(std::ostringstream& out, const std::string& prefix, const IsmOperator& a) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IsmZero>) {
                out << prefix << ".kind = zero\n";
            } else if constexpr (std::is_same_v<T, ShiftResidual>) {
                out << prefix << ".kind = shift_residual\n"
                    << prefix << ".target = " << render_vector(s.target) << "\n";
            } else if constexpr (std::is_same_v<T, AffineGradient>) {
                out << prefix << ".kind = affine_gradient\n"
                    << prefix << ".matrix = " << render_matrix(s.M) << "\n"
                    << prefix << ".q = " << render_vector(s.q) << "\n";
            } else if constexpr (std::is_same_v<T, FromPseudocontraction>) {
                out << prefix << ".kind = from_pseudocontraction\n";
                render_strict(out, prefix + ".s", s.s);
            } else {
                out << prefix << ".kind = rotation90\n";
            }
        },
        a.variant());
    out << prefix << ".alpha = " << format_real(a.alpha_claimed()) << "\n";
}

void render_monotone(std::ostringstream& out, const std::string& prefix,
                     const MaximalMonotone& b) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NormalCone>) {
                out << prefix << ".kind = normal_cone\n";
                render_set(out, prefix + ".set", s.set);
            } else if constexpr (std::is_same_v<T, AbsSubdifferential>) {
                out << prefix << ".kind = abs_subdifferential\n";
            } else {
                out << prefix << ".kind = linear_monotone\n"
                    << prefix << ".matrix = " << render_matrix(s.M) << "\n";
            }
        },
        b.variant());
}

void render_schedule(std::ostringstream& out, const std::string& prefix, const Schedule& s) {
    if (s.kind() == Schedule::Kind::constant) {
        out << prefix << ".kind = constant\n"
            << prefix << ".value = " << format_real(s.constant_value()) << "\n";
    } else {
        out << prefix << ".kind = table\n" << prefix << ".values = [";
        const auto& vals = s.table_values();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out << ", ";
            out << format_real(vals[i]);
        }
        out << "]\n";
    }
    out << prefix << ".low = " << format_real(s.low()) << "\n"
        << prefix << ".high = " << format_real(s.high()) << "\n";
}

}  // namespace

std::string serialize_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "dimension = " << cfg.dimension << "\n";
    out << "scheme = " << to_string(cfg.scheme) << "\n";
    if (cfg.set) render_set(out, "set", *cfg.set);
    if (cfg.operator_A) render_ism(out, "operator_A", *cfg.operator_A);
    if (cfg.map_T) render_nonexpansive(out, "map_T", *cfg.map_T);
    if (cfg.map_S) render_strict(out, "map_S", *cfg.map_S);
    if (cfg.operator_B) {
        render_monotone(out, "operator_B", *cfg.operator_B);
        out << "operator_B.r = " << format_real(cfg.resolvent_r) << "\n";
    }
    if (cfg.lambda) render_schedule(out, "lambda", *cfg.lambda);
    if (cfg.alpha_n) render_schedule(out, "alpha_n", *cfg.alpha_n);
    out << "nt_literal = " << (cfg.nt_literal ? "true" : "false") << "\n";
    out << "x0 = " << render_vector(cfg.x0) << "\n";
    out << "stop.max_iterations = " << cfg.stop.max_iterations << "\n";
    out << "stop.residual_threshold = " << format_real(cfg.stop.residual_threshold) << "\n";
    out << "stop.stall_threshold = " << format_real(cfg.stop.stall_threshold) << "\n";
    if (cfg.known_solution) out << "known_solution = " << render_vector(*cfg.known_solution) << "\n";
    out << "seed = " << cfg.seed << "\n";
    return out.str();
}

}  // namespace extragrad

#include "extragrad/operators.hpp"

#include <algorithm>
#include <cmath>

namespace extragrad {

// ----------------------------------------------------------- Nonexpansive

Nonexpansive::Nonexpansive(Variant v) : v_(std::move(v)) {
    if (const auto* c = std::get_if<NContraction>(&v_)) {
        if (!(c->c >= 0.0 && c->c < 1.0))
            throw ContractViolation("Contraction: factor must lie in [0,1)");
    } else if (const auto* a = std::get_if<NAverage>(&v_)) {
        if (!(a->weight > 0.0 && a->weight < 1.0))
            throw ContractViolation("Average: weight must lie in (0,1)");
        if (!a->inner) throw ContractViolation("Average: missing inner map");
    }
}

std::optional<std::size_t> Nonexpansive::dim_hint() const {
    return std::visit(
        [](const auto& s) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NIdentity>) return std::nullopt;
            else if constexpr (std::is_same_v<T, NProjectionOnto>) return s.set.dim();
            else if constexpr (std::is_same_v<T, NContraction>) return s.fixed_point.dim();
            else if constexpr (std::is_same_v<T, NRotation>) return std::size_t{2};
            else return s.inner->dim_hint();
        },
        v_);
}

Vector apply_T(const Nonexpansive& spec, const Vector& x) {
    return std::visit(
        [&x](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NIdentity>) {
                return x;
            } else if constexpr (std::is_same_v<T, NProjectionOnto>) {
                return s.set.project(x);
            } else if constexpr (std::is_same_v<T, NContraction>) {
                return combine(1.0, s.fixed_point, s.c, x - s.fixed_point);
            } else if constexpr (std::is_same_v<T, NRotation>) {
                if (x.dim() != 2) throw ContractViolation("Rotation: requires d = 2");
                const double ca = std::cos(s.angle), sa = std::sin(s.angle);
                return Vector{ca * x[0] - sa * x[1], sa * x[0] + ca * x[1]};
            } else {
                return combine(1.0 - s.weight, x, s.weight, apply_T(*s.inner, x));
            }
        },
        spec.variant());
}

// ------------------------------------------------ StrictPseudocontraction

StrictPseudocontraction::StrictPseudocontraction(Variant v, double k_claimed)
    : v_(std::move(v)), k_(k_claimed) {
    if (!(k_ >= 0.0 && k_ < 1.0))
        throw ContractViolation("StrictPseudocontraction: k must lie in [0,1)");
    if (const auto* sn = std::get_if<ScaledNegation>(&v_)) {
        if (!(sn->s >= 1.0)) throw ContractViolation("ScaledNegation: s must be >= 1");
    }
}

StrictPseudocontraction StrictPseudocontraction::scaled_negation(double s) {
    return scaled_negation(s, (s - 1.0) / (s + 1.0));
}

StrictPseudocontraction StrictPseudocontraction::scaled_negation(double s, double k_claimed) {
    return StrictPseudocontraction(ScaledNegation{s}, k_claimed);
}

StrictPseudocontraction StrictPseudocontraction::from_nonexpansive(Nonexpansive map,
                                                                   double k_claimed) {
    return StrictPseudocontraction(NonexpansiveAsZeroStrict{std::move(map)}, k_claimed);
}

std::optional<std::size_t> StrictPseudocontraction::dim_hint() const {
    if (const auto* w = std::get_if<NonexpansiveAsZeroStrict>(&v_)) return w->map.dim_hint();
    return std::nullopt;
}

Vector apply_strict(const StrictPseudocontraction& spec, const Vector& x) {
    return std::visit(
        [&x](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScaledNegation>) return -s.s * x;
            else return apply_T(s.map, x);
        },
        spec.variant());
}

// -------------------------------------------------------------- IsmOperator

IsmOperator::IsmOperator(Variant v, double alpha_claimed)
    : v_(std::move(v)), alpha_(alpha_claimed) {
    if (!(alpha_ > 0.0)) throw ContractViolation("IsmOperator: alpha_claimed must be > 0");
    if (const auto* a = std::get_if<AffineGradient>(&v_)) {
        if (a->q.dim() != a->M.dim())
            throw ContractViolation("AffineGradient: q and M dimension mismatch");
        if (!a->M.is_symmetric())
            throw ContractViolation("AffineGradient: M must be symmetric");
        const double lo = symmetric_lambda_min(a->M);
        const double hi = power_iteration_lambda_max(a->M);
        if (lo < -1e-10 * (1.0 + std::fabs(hi)))
            throw ContractViolation("AffineGradient: M must be positive semidefinite");
    }
}

IsmOperator IsmOperator::zero(double alpha_claimed) { return {IsmZero{}, alpha_claimed}; }

IsmOperator IsmOperator::shift_residual(Vector target, double alpha_claimed) {
    return {ShiftResidual{std::move(target)}, alpha_claimed};
}

IsmOperator IsmOperator::affine_gradient(Matrix M, Vector q) {
    const double lambda_max = power_iteration_lambda_max(M);
    const double alpha = lambda_max > 1e-300 ? 1.0 / lambda_max : 1.0;
    return {AffineGradient{std::move(M), std::move(q)}, alpha};
}

IsmOperator IsmOperator::affine_gradient(Matrix M, Vector q, double alpha_claimed) {
    return {AffineGradient{std::move(M), std::move(q)}, alpha_claimed};
}

IsmOperator IsmOperator::rotation90(double alpha_claimed) { return {Rotation90{}, alpha_claimed}; }

std::optional<std::size_t> IsmOperator::dim_hint() const {
    return std::visit(
        [](const auto& s) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IsmZero>) return std::nullopt;
            else if constexpr (std::is_same_v<T, ShiftResidual>) return s.target.dim();
            else if constexpr (std::is_same_v<T, AffineGradient>) return s.M.dim();
            else if constexpr (std::is_same_v<T, FromPseudocontraction>) return s.s.dim_hint();
            else return std::size_t{2};  // Rotation90
        },
        v_);
}

Vector apply_ism(const IsmOperator& spec, const Vector& x) {
    return std::visit(
        [&x](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IsmZero>) {
                return Vector(x.dim(), 0.0);
            } else if constexpr (std::is_same_v<T, ShiftResidual>) {
                return x - s.target;
            } else if constexpr (std::is_same_v<T, AffineGradient>) {
                return s.M.apply(x) + s.q;
            } else if constexpr (std::is_same_v<T, FromPseudocontraction>) {
                return x - apply_strict(s.s, x);
            } else {
                if (x.dim() != 2) throw ContractViolation("Rotation90: requires d = 2");
                return Vector{-x[1], x[0]};
            }
        },
        spec.variant());
}

IsmOperator ism_from_strict_pseudocontraction(const StrictPseudocontraction& s) {
    return {FromPseudocontraction{s}, (1.0 - s.k_claimed()) / 2.0};
}

// ---------------------------------------------------------- MaximalMonotone

MaximalMonotone::MaximalMonotone(Variant v) : v_(std::move(v)) {
    if (const auto* lm = std::get_if<LinearMonotone>(&v_)) {
        // monotonicity spot check <Mx,x> >= 0 on a fixed sample set
        Rng rng = make_rng(0x11d5eed);
        double scale = 0.0;
        for (std::size_t i = 0; i < lm->M.dim(); ++i)
            for (std::size_t j = 0; j < lm->M.dim(); ++j)
                scale = std::max(scale, std::fabs(lm->M(i, j)));
        for (int k = 0; k < 512; ++k) {
            const Vector x = sample_box(rng, lm->M.dim(), 4.0);
            if (inner(lm->M.apply(x), x) < -1e-10 * (1.0 + scale) * (1.0 + inner(x, x)))
                throw ContractViolation("LinearMonotone: <Mx,x> >= 0 violated on samples");
        }
    }
}

std::optional<std::size_t> MaximalMonotone::dim_hint() const {
    return std::visit(
        [](const auto& s) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NormalCone>) return s.set.dim();
            else if constexpr (std::is_same_v<T, LinearMonotone>) return s.M.dim();
            else return std::nullopt;
        },
        v_);
}

Vector resolvent(const MaximalMonotone& spec, double r, const Vector& x) {
    if (!(r > 0.0)) throw ContractViolation("resolvent: r must be > 0");
    return std::visit(
        [&](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NormalCone>) {
                return s.set.project(x);
            } else if constexpr (std::is_same_v<T, AbsSubdifferential>) {
                Vector y(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) {
                    const double m = std::fabs(x[i]) - r;
                    y[i] = m > 0.0 ? std::copysign(m, x[i]) : 0.0;
                }
                return y;
            } else {
                Matrix A = s.M;
                for (std::size_t i = 0; i < A.dim(); ++i)
                    for (std::size_t j = 0; j < A.dim(); ++j)
                        A(i, j) = (i == j ? 1.0 : 0.0) + r * s.M(i, j);
                return solve_dense(A, x);
            }
        },
        spec.variant());
}

// ------------------------------------------------------------------ audits

namespace {

void check_dim_hint(std::optional<std::size_t> hint, std::size_t dim, const char* what) {
    if (hint && *hint != dim)
        throw ContractViolation(std::string(what) + ": dimension mismatch with audit dim");
}

}  // namespace

std::vector<AuditReport> audit_ism(const IsmOperator& spec, std::size_t dim, long sample_count,
                                   std::uint64_t rng_seed, const Tolerance& tol,
                                   double sample_halfwidth) {
    if (sample_count < 1) throw ContractViolation("audit_ism: sample_count >= 1");
    tol.validate();
    check_dim_hint(spec.dim_hint(), dim, "audit_ism");
    const double alpha = spec.alpha_claimed();

    AuditAccumulator ism("ism inequality (alpha=" + format_real(alpha) + ")", tol.eps_certificate);
    AuditAccumulator mono("monotone", tol.eps_certificate);
    AuditAccumulator lip("lipschitz (1/alpha)", tol.eps_certificate);

    Rng rng = make_rng(rng_seed);
    for (long k = 0; k < sample_count; ++k) {
        const Vector x = sample_box(rng, dim, sample_halfwidth);
        const Vector y = sample_box(rng, dim, sample_halfwidth);
        const Vector dx = x - y;
        const Vector da = apply_ism(spec, x) - apply_ism(spec, y);
        const double scale2 = 1.0 + std::max(inner(x, x), inner(y, y));
        const double cross = inner(da, dx);

        ism.observe((alpha * inner(da, da) - cross) / scale2, x, y);
        mono.observe(-cross / scale2, x, y);
        lip.observe((norm(da) - norm(dx) / alpha) / scale2, x, y);
    }
    return {ism.finish(), mono.finish(), lip.finish()};
}

AuditReport audit_nonexpansive(const Nonexpansive& spec, std::size_t dim, long sample_count,
                               std::uint64_t rng_seed, const Tolerance& tol,
                               double sample_halfwidth) {
    if (sample_count < 1) throw ContractViolation("audit_nonexpansive: sample_count >= 1");
    tol.validate();
    check_dim_hint(spec.dim_hint(), dim, "audit_nonexpansive");

    AuditAccumulator acc("nonexpansive", tol.eps_certificate);
    Rng rng = make_rng(rng_seed);
    for (long k = 0; k < sample_count; ++k) {
        const Vector x = sample_box(rng, dim, sample_halfwidth);
        const Vector y = sample_box(rng, dim, sample_halfwidth);
        const double gap = distance(x, y);
        const double viol = distance(apply_T(spec, x), apply_T(spec, y)) - gap;
        acc.observe(viol / (1.0 + gap), x, y);
    }
    return acc.finish();
}

AuditReport audit_strict_pseudocontraction(const StrictPseudocontraction& spec, std::size_t dim,
                                           long sample_count, std::uint64_t rng_seed,
                                           const Tolerance& tol, double sample_halfwidth) {
    if (sample_count < 1)
        throw ContractViolation("audit_strict_pseudocontraction: sample_count >= 1");
    tol.validate();
    check_dim_hint(spec.dim_hint(), dim, "audit_strict_pseudocontraction");
    const double k_claim = spec.k_claimed();

    AuditAccumulator acc("strict pseudocontraction (k=" + format_real(k_claim) + ")",
                         tol.eps_certificate);
    Rng rng = make_rng(rng_seed);
    for (long k = 0; k < sample_count; ++k) {
        const Vector x = sample_box(rng, dim, sample_halfwidth);
        const Vector y = sample_box(rng, dim, sample_halfwidth);
        const Vector dx = x - y;
        const Vector ds = apply_strict(spec, x) - apply_strict(spec, y);
        const Vector dres = dx - ds;  // (I-S)x - (I-S)y
        const double viol = inner(ds, ds) - inner(dx, dx) - k_claim * inner(dres, dres);
        const double scale2 = 1.0 + std::max(inner(x, x), inner(y, y));
        acc.observe(viol / scale2, x, y);
    }
    return acc.finish();
}

}  // namespace extragrad

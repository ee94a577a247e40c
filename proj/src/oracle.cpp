#include "extragrad/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "extragrad/rng.hpp"

namespace extragrad {

namespace {

constexpr long kIterationBudget = 10'000'000;

}  // namespace

ReferenceSolution solve_vi_reference(const ConvexSet& C, const IsmOperator& A, double tol) {
    if (!(tol > 0.0)) throw ContractViolation("solve_vi_reference: tol must be > 0");
    const double lambda = A.alpha_claimed();
    Vector x = C.project(Vector(C.dim(), 0.0));
    for (long it = 0; it < kIterationBudget; ++it) {
        Vector next = C.project(combine(1.0, x, -lambda, apply_ism(A, x)));
        const double resid = distance(x, next);
        x = std::move(next);
        if (resid <= tol) return {std::move(x), true, it + 1, resid};
        if (!is_finite(x)) return {std::move(x), false, it + 1, resid};
    }
    const double resid = distance(x, C.project(combine(1.0, x, -lambda, apply_ism(A, x))));
    return {std::move(x), false, kIterationBudget, resid};
}

namespace {

// argmin over C of <g, y>, for the variants where that program has a
// closed-form solution; used to confront the certificate with the exact
// worst direction instead of relying on sampling alone.
std::optional<Vector> extreme_candidate(const ConvexSet& C, const Vector& g) {
    const auto& v = C.variant();
    if (const auto* b = std::get_if<Box>(&v)) {
        Vector y(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) y[i] = g[i] > 0.0 ? b->lo[i] : b->hi[i];
        return y;
    }
    if (const auto* s = std::get_if<Ball>(&v)) {
        const double ng = norm(g);
        if (ng == 0.0) return s->center;
        return combine(1.0, s->center, -s->radius / ng, g);
    }
    if (std::get_if<Simplex>(&v)) {
        std::size_t j = 0;
        for (std::size_t i = 1; i < g.dim(); ++i)
            if (g[i] < g[j]) j = i;
        Vector y(g.dim(), 0.0);
        y[j] = 1.0;
        return y;
    }
    return std::nullopt;  // Halfspace / WholeSpace: linear program unbounded
}

}  // namespace

VICertificate verify_vi_certificate(const ConvexSet& C, const IsmOperator& A,
                                    const Vector& candidate, long sample_count,
                                    std::uint64_t rng_seed, const Tolerance& tol) {
    if (sample_count < 1) throw ContractViolation("verify_vi_certificate: sample_count >= 1");
    tol.validate();
    if (candidate.dim() != C.dim())
        throw ContractViolation("verify_vi_certificate: dimension mismatch");

    VICertificate cert;
    cert.candidate = candidate;
    cert.feasible = C.contains(candidate, tol.eps_feasibility);
    const Vector g = apply_ism(A, candidate);

    Rng rng = make_rng(rng_seed);
    double worst = 0.0;
    long counted = 0;
    // widen the sampling envelope periodically so unbounded sets are probed far out
    static constexpr double kScales[] = {1.0, 10.0, 100.0};
    for (long k = 0; k < sample_count; ++k) {
        const Vector y = C.sample_point(rng, kScales[k % 3]);
        const double val = inner(g, y - candidate);
        if (counted == 0 || val < worst) worst = val;
        ++counted;
    }
    if (const auto y = extreme_candidate(C, g)) {
        const double val = inner(g, *y - candidate);
        if (val < worst) worst = val;
        ++counted;
    }
    cert.worst_violation = worst;
    cert.samples = counted;
    cert.passed = cert.feasible && worst >= -tol.eps_certificate;
    return cert;
}

ReferenceSolution solve_fixed_point_reference(const Nonexpansive& T, const Vector& x0,
                                              double tol) {
    if (!(tol > 0.0)) throw ContractViolation("solve_fixed_point_reference: tol must be > 0");
    Vector x = x0;
    for (long it = 0; it < kIterationBudget; ++it) {
        const Vector tx = apply_T(T, x);
        const double resid = distance(x, tx);
        if (resid <= tol) return {std::move(x), true, it, resid};
        x = combine(0.5, x, 0.5, tx);
        if (!is_finite(x)) return {std::move(x), false, it + 1, resid};
    }
    const double resid = distance(x, apply_T(T, x));
    return {std::move(x), false, kIterationBudget, resid};
}

}  // namespace extragrad

#pragma once

#include <cstdint>

#include "extragrad/core.hpp"
#include "extragrad/operators.hpp"
#include "extragrad/sets.hpp"

namespace extragrad {

/// Statistical check of the variational-inequality condition
/// <A x*, y - x*> >= 0 over sampled y in C plus the closed-form extreme
/// candidates of the set.
struct VICertificate {
    Vector candidate;
    double worst_violation = 0.0;  // min over y of <A x*, y - x*>
    long samples = 0;
    bool feasible = false;
    bool passed = false;
};

struct ReferenceSolution {
    Vector x;
    bool converged = false;
    long iterations = 0;
    double residual = 0.0;
};

// Plain projected fixed-point iteration x <- P_C(x - alpha A x), run to
// residual <= tol. Deliberately simpler (and slower) than the schemes it
// cross-checks; the constant step alpha is half the 2*alpha stability bound.
ReferenceSolution solve_vi_reference(const ConvexSet& C, const IsmOperator& A, double tol);

VICertificate verify_vi_certificate(const ConvexSet& C, const IsmOperator& A,
                                    const Vector& candidate, long sample_count,
                                    std::uint64_t rng_seed, const Tolerance& tol = Tolerance{});

// Averaged iteration x <- x/2 + Tx/2; converges to a fixed point of any
// nonexpansive T that has one.
ReferenceSolution solve_fixed_point_reference(const Nonexpansive& T, const Vector& x0, double tol);

}  // namespace extragrad

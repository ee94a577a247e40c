#include <doctest.h>

#include <cmath>

#include "extragrad/oracle.hpp"
#include "extragrad/schemes.hpp"
#include "fixtures.hpp"

using namespace extragrad;

TEST_CASE("reference solver reproduces closed-form solutions") {
    {
        const auto sol = solve_vi_reference(ConvexSet::box({0, 0}, {1, 1}),
                                            IsmOperator::shift_residual({2.0, 0.5}), 1e-10);
        CHECK(sol.converged);
        CHECK(distance(sol.x, Vector{1.0, 0.5}) <= 1e-9);
    }
    {
        const auto sol = solve_vi_reference(ConvexSet::ball({0, 0}, 1.0),
                                            IsmOperator::shift_residual({3.0, 4.0}), 1e-10);
        CHECK(sol.converged);
        CHECK(distance(sol.x, Vector{0.6, 0.8}) <= 1e-9);
    }
    {
        // unconstrained quadratic: M x + q = 0 at x = (1, 1)
        const auto sol = solve_vi_reference(
            ConvexSet::whole_space(2),
            IsmOperator::affine_gradient(Matrix::diag({1, 2}), Vector{-1, -2}), 1e-12);
        CHECK(sol.converged);
        CHECK(distance(sol.x, Vector{1.0, 1.0}) <= 1e-10);
    }
}

TEST_CASE("reference solver reports non-convergence instead of looping forever") {
    // an overstated constant makes the conservative step wildly too long
    const auto wrong =
        IsmOperator::affine_gradient(Matrix::diag({1, 2}), Vector{-1, -2}, 5.0);
    const auto sol = solve_vi_reference(ConvexSet::whole_space(2), wrong, 1e-10);
    CHECK_FALSE(sol.converged);
}

TEST_CASE("certificate accepts the true solution and rejects an impostor") {
    const auto box = ConvexSet::box({0, 0}, {1, 1});
    const auto A = IsmOperator::shift_residual({2.0, 0.5});
    {
        const auto cert = verify_vi_certificate(box, A, Vector{1.0, 0.5}, 20000, 7);
        CHECK(cert.feasible);
        CHECK(cert.passed);
        CHECK(cert.worst_violation >= -1e-10);
    }
    {
        const auto cert = verify_vi_certificate(box, A, Vector{0.0, 0.0}, 20000, 7);
        CHECK(cert.feasible);
        CHECK_FALSE(cert.passed);
        // the worst direction is the far corner: <(-2,-0.5), (1,1)> = -2.5
        CHECK(cert.worst_violation <= -2.25);
    }
}

TEST_CASE("zero operator certifies any feasible candidate with exact zero") {
    const auto simplex = ConvexSet::simplex(3);
    const auto cert =
        verify_vi_certificate(simplex, IsmOperator::zero(), Vector{0.2, 0.3, 0.5}, 5000, 9);
    CHECK(cert.passed);
    CHECK(cert.worst_violation == 0.0);
}

TEST_CASE("infeasible candidates fail regardless of the inequality") {
    const auto box = ConvexSet::box({0, 0}, {1, 1});
    const auto cert =
        verify_vi_certificate(box, IsmOperator::zero(), Vector{2.0, 0.5}, 1000, 5);
    CHECK_FALSE(cert.feasible);
    CHECK_FALSE(cert.passed);
}

TEST_CASE("oracle agrees with every scheme run on the suite") {
    const auto suite = fixtures::make_suite();
    for (const auto& p : suite) {
        const auto sol = solve_vi_reference(*p.config.set, *p.config.operator_A, 1e-10);
        REQUIRE(sol.converged);
        CHECK(distance(sol.x, p.z) <= 1e-8);
        const auto trace = run(p.config);
        CHECK(distance(trace.final_record().x, sol.x) <= 1e-6);
    }
}

TEST_CASE("certificate soundness across the suite") {
    const auto suite = fixtures::make_suite();
    Rng rng = make_rng(71);
    for (const auto& p : suite) {
        const auto& C = *p.config.set;
        const auto& A = *p.config.operator_A;
        const auto sol = solve_vi_reference(C, A, 1e-10);
        CHECK(verify_vi_certificate(C, A, sol.x, 20000, 11).passed);

        // a feasible point away from the solution must be rejected; walk
        // towards another feasible point so convexity keeps us inside C
        Vector anchor = C.sample_point(rng);
        for (int tries = 0; distance(anchor, p.z) < 0.2 && tries < 1000; ++tries)
            anchor = C.sample_point(rng);
        REQUIRE(distance(anchor, p.z) >= 0.2);
        const double theta = 0.15 / distance(anchor, p.z);
        const Vector off = combine(1.0 - theta, p.z, theta, anchor);
        REQUIRE(distance(off, p.z) >= 0.1);
        const auto cert = verify_vi_certificate(C, A, off, 20000, 12);
        CHECK_FALSE(cert.passed);
    }
}

TEST_CASE("fixed point reference solver") {
    {
        const auto sol = solve_fixed_point_reference(Nonexpansive::contraction(0.5, {2.0, 2.0}),
                                                     Vector{0.0, 0.0}, 1e-12);
        CHECK(sol.converged);
        CHECK(distance(sol.x, Vector{2.0, 2.0}) <= 1e-11);
    }
    {
        const Vector x0{3.0, -1.0};
        const auto sol = solve_fixed_point_reference(Nonexpansive::identity(), x0, 1e-12);
        CHECK(sol.converged);
        CHECK(sol.iterations == 0);
        CHECK(sol.x == x0);
    }
    {
        // plain iteration of a rotation orbits forever; the averaged one contracts
        const auto sol =
            solve_fixed_point_reference(Nonexpansive::rotation(1.0), Vector{1.0, 1.0}, 1e-10);
        CHECK(sol.converged);
        CHECK(norm(sol.x) <= 1e-9);
    }
}

#pragma once

// Construction kit for the test problems: ten problems over boxes, balls
// and the simplex whose unique common element z of F(T) and the VI
// solution set is known in closed form (derived by KKT inspection, noted
// per problem).

#include <string>
#include <vector>

#include "extragrad/config_io.hpp"
#include "extragrad/problem.hpp"

namespace extragrad::fixtures {

struct SuiteProblem {
    std::string name;
    ProblemConfig config;
    Vector z;  // the known singleton common element
};

inline StoppingRule tight_stop() {
    StoppingRule s;
    s.max_iterations = 10000;
    s.residual_threshold = 1e-10;
    s.stall_threshold = 0.0;
    return s;
}

inline std::vector<SuiteProblem> make_suite() {
    std::vector<SuiteProblem> suite;

    {
        // z = P_C(2, 0.5) = (1, 0.5): clamp of the shifted target
        SuiteProblem p;
        p.name = "box_shift_identity";
        p.config.dimension = 2;
        p.config.set = ConvexSet::box({0.0, 0.0}, {1.0, 1.0});
        p.config.operator_A = IsmOperator::shift_residual({2.0, 0.5});
        p.config.map_T = Nonexpansive::identity();
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.7);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {-0.3, 2.0};
        p.config.stop = tight_stop();
        p.z = {1.0, 0.5};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // z = radial projection of (3,4) onto the unit ball = (0.6, 0.8)
        SuiteProblem p;
        p.name = "ball_shift_identity";
        p.config.dimension = 2;
        p.config.set = ConvexSet::ball({0.0, 0.0}, 1.0);
        p.config.operator_A = IsmOperator::shift_residual({3.0, 4.0});
        p.config.map_T = Nonexpansive::identity();
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::table({0.3, 0.5, 0.9, 1.2}, 0.3, 1.2);
        p.config.alpha_n = Schedule::table({0.3, 0.4, 0.5, 0.6}, 0.3, 0.6);
        p.config.x0 = {0.1, -0.2};
        p.config.stop = tight_stop();
        p.z = {0.6, 0.8};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // interior target: A z = 0 and z is T's unique fixed point
        SuiteProblem p;
        p.name = "box_shift_contraction";
        p.config.dimension = 2;
        p.config.set = ConvexSet::box({0.0, 0.0}, {1.0, 1.0});
        p.config.operator_A = IsmOperator::shift_residual({0.5, 0.25});
        p.config.map_T = Nonexpansive::contraction(0.5, {0.5, 0.25});
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.8);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {1.0, 1.0};
        p.config.stop = tight_stop();
        p.z = {0.5, 0.25};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // z = P_simplex(2,-1,0) = (1,0,0): support threshold tau = 1
        SuiteProblem p;
        p.name = "simplex_shift_identity";
        p.config.dimension = 3;
        p.config.set = ConvexSet::simplex(3);
        p.config.operator_A = IsmOperator::shift_residual({2.0, -1.0, 0.0});
        p.config.map_T = Nonexpansive::identity();
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.9);
        p.config.alpha_n = Schedule::constant(0.4);
        p.config.x0 = {0.2, 0.3, 0.5};
        p.config.stop = tight_stop();
        p.z = {1.0, 0.0, 0.0};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // separable quadratic on a box: z = (clamp(2), 0.5) = (1, 0.5)
        SuiteProblem p;
        p.name = "box_affine_identity";
        p.config.dimension = 2;
        p.config.set = ConvexSet::box({-1.0, -1.0}, {1.0, 1.0});
        p.config.operator_A =
            IsmOperator::affine_gradient(Matrix::diag({1.0, 2.0}), {-2.0, -1.0}, 0.5);
        p.config.map_T = Nonexpansive::identity();
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.45);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {-1.0, -1.0};
        p.config.stop = tight_stop();
        p.z = {1.0, 0.5};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // A = I, so z = 0; rotation's only fixed point is also 0
        SuiteProblem p;
        p.name = "ball_shift_rotation";
        p.config.dimension = 2;
        p.config.set = ConvexSet::ball({0.0, 0.0}, 1.0);
        p.config.operator_A = IsmOperator::shift_residual({0.0, 0.0});
        p.config.map_T = Nonexpansive::rotation(1.0);
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.7);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {0.9, -0.3};
        p.config.stop = tight_stop();
        p.z = {0.0, 0.0};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // coupled quadratic; KKT at z = (-1.5, 3): (Az)_1 = 0 interior,
        // (Az)_2 = 4.5 >= 0 on the active lower face
        SuiteProblem p;
        p.name = "box_affine_coupled";
        p.config.dimension = 2;
        p.config.set = ConvexSet::box({-2.0, 3.0}, {-1.0, 4.0});
        p.config.operator_A = IsmOperator::affine_gradient(
            Matrix({{2.0, 1.0}, {1.0, 2.0}}), {0.0, 0.0});  // alpha = 1/3 by power iteration
        p.config.map_T = Nonexpansive::identity();
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.3);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {0.0, 0.0};
        p.config.stop = tight_stop();
        p.z = {-1.5, 3.0};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // z = P_simplex(0.5,0.5,-0.5) = (0.5,0.5,0) with tau = 0
        SuiteProblem p;
        p.name = "simplex_shift_contraction";
        p.config.dimension = 3;
        p.config.set = ConvexSet::simplex(3);
        p.config.operator_A = IsmOperator::shift_residual({0.5, 0.5, -0.5});
        p.config.map_T = Nonexpansive::contraction(0.7, {0.5, 0.5, 0.0});
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(1.0);
        p.config.alpha_n = Schedule::constant(0.6);
        p.config.x0 = {1.0, 0.0, 0.0};
        p.config.stop = tight_stop();
        p.z = {0.5, 0.5, 0.0};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // T projects onto a ball centered at the VI solution
        SuiteProblem p;
        p.name = "box_shift_projection";
        p.config.dimension = 2;
        p.config.set = ConvexSet::box({0.0, 0.0}, {1.0, 1.0});
        p.config.operator_A = IsmOperator::shift_residual({2.0, 0.5});
        p.config.map_T = Nonexpansive::projection_onto(ConvexSet::ball({1.0, 0.5}, 0.7));
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.5);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {0.0, 0.0};
        p.config.stop = tight_stop();
        p.z = {1.0, 0.5};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }
    {
        // interior stationary point of the quadratic, ball never active
        SuiteProblem p;
        p.name = "ball_affine_contraction";
        p.config.dimension = 2;
        p.config.set = ConvexSet::ball({1.0, 1.0}, 2.0);
        p.config.operator_A =
            IsmOperator::affine_gradient(Matrix::diag({1.0, 2.0}), {-1.0, -2.0}, 0.5);
        p.config.map_T = Nonexpansive::contraction(0.8, {1.0, 1.0});
        p.config.scheme = SchemeKind::ko;
        p.config.lambda = Schedule::constant(0.45);
        p.config.alpha_n = Schedule::constant(0.5);
        p.config.x0 = {2.5, -0.5};
        p.config.stop = tight_stop();
        p.z = {1.0, 1.0};
        p.config.known_solution = p.z;
        suite.push_back(std::move(p));
    }

    return suite;
}

// The contraction speed benchmark problem: T = Contraction(0.5, fp = 0),
// alpha_n = 0.5, x0 = (1, 0), threshold 1e-8.
inline ProblemConfig make_speed_config() {
    ProblemConfig cfg;
    cfg.dimension = 2;
    cfg.map_T = Nonexpansive::contraction(0.5, {0.0, 0.0});
    cfg.scheme = SchemeKind::picard_mann;
    cfg.alpha_n = Schedule::constant(0.5);
    cfg.x0 = {1.0, 0.0};
    cfg.stop.max_iterations = 10000;
    cfg.stop.residual_threshold = 1e-8;
    cfg.stop.stall_threshold = 0.0;
    cfg.known_solution = Vector{0.0, 0.0};
    return cfg;
}

}  // namespace extragrad::fixtures

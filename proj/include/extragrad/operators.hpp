#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extragrad/audit.hpp"
#include "extragrad/core.hpp"
#include "extragrad/linalg.hpp"
#include "extragrad/rng.hpp"
#include "extragrad/sets.hpp"

namespace extragrad {

// ---------------------------------------------------------------------
// Nonexpansive maps T: ||Tx - Ty|| <= ||x - y||.
// ---------------------------------------------------------------------

class Nonexpansive;

struct NIdentity {};
struct NProjectionOnto {
    ConvexSet set;
};
struct NContraction {
    double c;  // in [0,1); c >= 1 is rejected at construction
    Vector fixed_point;
};
struct NRotation {
    double angle;  // radians, d = 2 only
};
struct NAverage {
    std::shared_ptr<const Nonexpansive> inner;
    double weight;  // in (0,1); T = (1-w) I + w inner
};

class Nonexpansive {
  public:
    using Variant = std::variant<NIdentity, NProjectionOnto, NContraction, NRotation, NAverage>;

    explicit Nonexpansive(Variant v);

    static Nonexpansive identity() { return Nonexpansive(NIdentity{}); }
    static Nonexpansive projection_onto(ConvexSet set) {
        return Nonexpansive(NProjectionOnto{std::move(set)});
    }
    static Nonexpansive contraction(double c, Vector fixed_point) {
        return Nonexpansive(NContraction{c, std::move(fixed_point)});
    }
    static Nonexpansive rotation(double angle) { return Nonexpansive(NRotation{angle}); }
    static Nonexpansive average(Nonexpansive inner, double weight) {
        return Nonexpansive(NAverage{std::make_shared<Nonexpansive>(std::move(inner)), weight});
    }

    const Variant& variant() const { return v_; }
    // Dimension pinned by the variant, if any (Identity is dimension-free).
    std::optional<std::size_t> dim_hint() const;

  private:
    Variant v_;
};

Vector apply_T(const Nonexpansive& spec, const Vector& x);

// ---------------------------------------------------------------------
// k-strict pseudocontractions S:
//   ||Sx - Sy||^2 <= ||x - y||^2 + k ||(I-S)x - (I-S)y||^2,  0 <= k < 1.
// ---------------------------------------------------------------------

struct ScaledNegation {
    double s;  // >= 1; S(x) = -s x. Minimal valid k is (s-1)/(s+1).
};
struct NonexpansiveAsZeroStrict {
    Nonexpansive map;  // any nonexpansive map is a 0-strict pseudocontraction
};

class StrictPseudocontraction {
  public:
    using Variant = std::variant<ScaledNegation, NonexpansiveAsZeroStrict>;

    // k_claimed must lie in [0,1); whether it is large enough for the
    // variant is what audit_strict_pseudocontraction decides.
    StrictPseudocontraction(Variant v, double k_claimed);

    static StrictPseudocontraction scaled_negation(double s);  // k = (s-1)/(s+1)
    static StrictPseudocontraction scaled_negation(double s, double k_claimed);
    static StrictPseudocontraction from_nonexpansive(Nonexpansive map, double k_claimed = 0.0);

    const Variant& variant() const { return v_; }
    double k_claimed() const { return k_; }
    std::optional<std::size_t> dim_hint() const;

  private:
    Variant v_;
    double k_;
};

Vector apply_strict(const StrictPseudocontraction& spec, const Vector& x);

// ---------------------------------------------------------------------
// alpha-inverse strongly monotone maps A:
//   <Ax - Ay, x - y> >= alpha ||Ax - Ay||^2.
// ---------------------------------------------------------------------

class IsmOperator;

struct IsmZero {};
struct ShiftResidual {
    Vector target;  // A(x) = x - target; 1-ism
};
struct AffineGradient {
    Matrix M;  // symmetric PSD
    Vector q;  // A(x) = M x + q; (1/lambda_max)-ism
};
struct FromPseudocontraction {
    StrictPseudocontraction s;  // A = I - S; ((1-k)/2)-ism
};
struct Rotation90 {};  // d = 2; A(x) = (-x2, x1): monotone but never ism

class IsmOperator {
  public:
    using Variant =
        std::variant<IsmZero, ShiftResidual, AffineGradient, FromPseudocontraction, Rotation90>;

    IsmOperator(Variant v, double alpha_claimed);

    static IsmOperator zero(double alpha_claimed = 1.0);
    static IsmOperator shift_residual(Vector target, double alpha_claimed = 1.0);
    // Default alpha is 1/lambda_max(M), computed by power iteration.
    static IsmOperator affine_gradient(Matrix M, Vector q);
    static IsmOperator affine_gradient(Matrix M, Vector q, double alpha_claimed);
    static IsmOperator rotation90(double alpha_claimed);

    const Variant& variant() const { return v_; }
    double alpha_claimed() const { return alpha_; }
    std::optional<std::size_t> dim_hint() const;

  private:
    Variant v_;
    double alpha_;
};

Vector apply_ism(const IsmOperator& spec, const Vector& x);

// A = I - S with alpha = (1 - k)/2.
IsmOperator ism_from_strict_pseudocontraction(const StrictPseudocontraction& s);

// ---------------------------------------------------------------------
// Maximal monotone operators B, represented by their resolvents
// J_r = (I + rB)^{-1}.
// ---------------------------------------------------------------------

struct NormalCone {
    ConvexSet set;  // J_r = P_C for every r > 0
};
struct AbsSubdifferential {};  // componentwise soft threshold
struct LinearMonotone {
    Matrix M;  // <Mx,x> >= 0 (not necessarily symmetric); J_r solves (I+rM)y = x
};

class MaximalMonotone {
  public:
    using Variant = std::variant<NormalCone, AbsSubdifferential, LinearMonotone>;

    explicit MaximalMonotone(Variant v);

    static MaximalMonotone normal_cone(ConvexSet set) {
        return MaximalMonotone(NormalCone{std::move(set)});
    }
    static MaximalMonotone abs_subdifferential() { return MaximalMonotone(AbsSubdifferential{}); }
    static MaximalMonotone linear_monotone(Matrix M) {
        return MaximalMonotone(LinearMonotone{std::move(M)});
    }

    const Variant& variant() const { return v_; }
    std::optional<std::size_t> dim_hint() const;

  private:
    Variant v_;
};

Vector resolvent(const MaximalMonotone& spec, double r, const Vector& x);

// ---------------------------------------------------------------------
// Sampled certificate audits. `dim` is the ambient dimension; variants
// that pin a dimension must agree with it. Pairs are drawn uniformly from
// [-sample_halfwidth, sample_halfwidth]^dim.
// ---------------------------------------------------------------------

// Three reports: the defining ism inequality with alpha_claimed, plus the
// implied monotonicity and (1/alpha)-Lipschitz consequences.
std::vector<AuditReport> audit_ism(const IsmOperator& spec, std::size_t dim, long sample_count,
                                   std::uint64_t rng_seed, const Tolerance& tol = Tolerance{},
                                   double sample_halfwidth = 8.0);

AuditReport audit_nonexpansive(const Nonexpansive& spec, std::size_t dim, long sample_count,
                               std::uint64_t rng_seed, const Tolerance& tol = Tolerance{},
                               double sample_halfwidth = 8.0);

AuditReport audit_strict_pseudocontraction(const StrictPseudocontraction& spec, std::size_t dim,
                                           long sample_count, std::uint64_t rng_seed,
                                           const Tolerance& tol = Tolerance{},
                                           double sample_halfwidth = 8.0);

}  // namespace extragrad

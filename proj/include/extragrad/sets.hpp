#pragma once

#include <string>
#include <variant>
#include <vector>

#include "extragrad/audit.hpp"
#include "extragrad/core.hpp"
#include "extragrad/rng.hpp"

namespace extragrad {

// Closed convex sets with exact metric projections. Only variants whose
// projection has a closed form (or an exactly-solvable finite algorithm,
// for the simplex) are admitted, so projection error never pollutes the
// inequality checks built on top.

struct WholeSpace {
    std::size_t dim;
};

struct Box {
    Vector lo, hi;  // lo[i] <= hi[i]
};

struct Ball {
    Vector center;
    double radius;  // > 0
};

struct Halfspace {
    Vector normal;  // != 0; the set is { x : <normal,x> <= offset }
    double offset;
};

struct Simplex {
    std::size_t dim;  // { x : x_i >= 0, sum x_i = 1 }
};

class ConvexSet {
  public:
    using Variant = std::variant<WholeSpace, Box, Ball, Halfspace, Simplex>;

    explicit ConvexSet(Variant v);

    static ConvexSet whole_space(std::size_t d) { return ConvexSet(WholeSpace{d}); }
    static ConvexSet box(Vector lo, Vector hi) { return ConvexSet(Box{std::move(lo), std::move(hi)}); }
    static ConvexSet ball(Vector center, double radius) {
        return ConvexSet(Ball{std::move(center), radius});
    }
    static ConvexSet halfspace(Vector normal, double offset) {
        return ConvexSet(Halfspace{std::move(normal), offset});
    }
    static ConvexSet simplex(std::size_t d) { return ConvexSet(Simplex{d}); }

    std::size_t dim() const;
    const Variant& variant() const { return v_; }
    std::string kind_name() const;

    Vector project(const Vector& x) const;
    bool contains(const Vector& x, double eps) const;

    // Uniform-ish draw from the set, used by projection audits and VI
    // certificates. Box/Simplex are sampled directly; Ball via a scaled
    // normalized Gaussian; Halfspace/WholeSpace via Gaussian (+projection).
    Vector sample_point(Rng& rng, double scale = 1.0) const;

  private:
    Variant v_;
};

// Checks the three metric-projection properties on sample_count random
// pairs (x in H, y in C): nonexpansiveness, the Pythagorean inequality
// and the variational characterization. One report per property.
std::vector<AuditReport> audit_projection(const ConvexSet& set, long sample_count,
                                          std::uint64_t rng_seed,
                                          const Tolerance& tol = Tolerance{},
                                          double sample_halfwidth = 8.0);

bool all_passed(const std::vector<AuditReport>& reports);

}  // namespace extragrad

#include "extragrad/sets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extragrad {

ConvexSet::ConvexSet(Variant v) : v_(std::move(v)) {
    if (const auto* b = std::get_if<Box>(&v_)) {
        require_same_dim(b->lo, b->hi, "Box");
        if (b->lo.dim() == 0) throw ContractViolation("Box: dimension must be >= 1");
        for (std::size_t i = 0; i < b->lo.dim(); ++i)
            if (!(b->lo[i] <= b->hi[i])) throw ContractViolation("Box: lo[i] <= hi[i] required");
    } else if (const auto* s = std::get_if<Ball>(&v_)) {
        if (s->center.dim() == 0) throw ContractViolation("Ball: dimension must be >= 1");
        if (!(s->radius > 0.0)) throw ContractViolation("Ball: radius must be > 0");
    } else if (const auto* h = std::get_if<Halfspace>(&v_)) {
        if (!(norm(h->normal) > 0.0)) throw ContractViolation("Halfspace: normal must be nonzero");
    } else if (const auto* w = std::get_if<WholeSpace>(&v_)) {
        if (w->dim == 0) throw ContractViolation("WholeSpace: dimension must be >= 1");
    } else if (const auto* sx = std::get_if<Simplex>(&v_)) {
        if (sx->dim == 0) throw ContractViolation("Simplex: dimension must be >= 1");
    }
}

std::size_t ConvexSet::dim() const {
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return s.dim;
            else if constexpr (std::is_same_v<T, Box>) return s.lo.dim();
            else if constexpr (std::is_same_v<T, Ball>) return s.center.dim();
            else if constexpr (std::is_same_v<T, Halfspace>) return s.normal.dim();
            else return s.dim;  // Simplex
        },
        v_);
}

std::string ConvexSet::kind_name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return "whole";
            else if constexpr (std::is_same_v<T, Box>) return "box";
            else if constexpr (std::is_same_v<T, Ball>) return "ball";
            else if constexpr (std::is_same_v<T, Halfspace>) return "halfspace";
            else return "simplex";
        },
        v_);
}

namespace {

// Sort-then-threshold simplex projection: find tau with
// sum_i max(x_i - tau, 0) = 1 and clip.
Vector project_simplex(const Vector& x) {
    const std::size_t d = x.dim();
    std::vector<double> u(x.begin(), x.end());
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumsum = 0.0;
    double tau = 0.0;
    std::size_t support = 0;
    for (std::size_t j = 0; j < d; ++j) {
        cumsum += u[j];
        const double cand = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - cand > 0.0) {
            tau = cand;
            support = j + 1;
        }
    }
    (void)support;
    Vector y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = std::max(x[i] - tau, 0.0);
    return y;
}

}  // namespace

Vector ConvexSet::project(const Vector& x) const {
    if (x.dim() != dim()) throw ContractViolation("project: dimension mismatch");
    return std::visit(
        [&x](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return x;
            } else if constexpr (std::is_same_v<T, Box>) {
                Vector y(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i)
                    y[i] = std::clamp(x[i], s.lo[i], s.hi[i]);
                return y;
            } else if constexpr (std::is_same_v<T, Ball>) {
                const Vector r = x - s.center;
                const double nr = norm(r);
                if (nr <= s.radius) return x;
                Vector y(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i)
                    y[i] = s.center[i] + (s.radius * r[i]) / nr;
                return y;
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                const double excess = inner(s.normal, x) - s.offset;
                if (excess <= 0.0) return x;
                return combine(1.0, x, -excess / inner(s.normal, s.normal), s.normal);
            } else {
                return project_simplex(x);
            }
        },
        v_);
}

bool ConvexSet::contains(const Vector& x, double eps) const {
    if (eps < 0.0) throw ContractViolation("contains: eps must be >= 0");
    if (x.dim() != dim()) throw ContractViolation("contains: dimension mismatch");
    return std::visit(
        [&x, eps](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return true;
            } else if constexpr (std::is_same_v<T, Box>) {
                for (std::size_t i = 0; i < x.dim(); ++i)
                    if (x[i] < s.lo[i] - eps || x[i] > s.hi[i] + eps) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Ball>) {
                return norm(x - s.center) <= s.radius + eps;
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                return inner(s.normal, x) <= s.offset + eps;
            } else {
                double sum = 0.0;
                for (std::size_t i = 0; i < x.dim(); ++i) {
                    if (x[i] < -eps) return false;
                    sum += x[i];
                }
                return std::fabs(sum - 1.0) <= eps;
            }
        },
        v_);
}

Vector ConvexSet::sample_point(Rng& rng, double scale) const {
    return std::visit(
        [&](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return sample_gaussian(rng, s.dim, scale);
            } else if constexpr (std::is_same_v<T, Box>) {
                Vector v(s.lo.dim());
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    std::uniform_real_distribution<double> u(s.lo[i], s.hi[i]);
                    v[i] = u(rng);
                }
                return v;
            } else if constexpr (std::is_same_v<T, Ball>) {
                const std::size_t d = s.center.dim();
                Vector g = sample_gaussian(rng, d);
                const double ng = norm(g);
                if (ng == 0.0) return s.center;
                const double r =
                    s.radius * std::pow(sample_uniform01(rng), 1.0 / static_cast<double>(d));
                return combine(1.0, s.center, r / ng, g);
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                return project(sample_gaussian(rng, s.normal.dim(), scale));
            } else {
                // exponential spacings give the uniform distribution on the simplex
                Vector v(s.dim);
                double sum = 0.0;
                for (std::size_t i = 0; i < s.dim; ++i) {
                    v[i] = -std::log(std::max(sample_uniform01(rng), 1e-300));
                    sum += v[i];
                }
                for (std::size_t i = 0; i < s.dim; ++i) v[i] /= sum;
                return v;
            }
        },
        v_);
}

std::vector<AuditReport> audit_projection(const ConvexSet& set, long sample_count,
                                          std::uint64_t rng_seed, const Tolerance& tol,
                                          double sample_halfwidth) {
    if (sample_count < 1) throw ContractViolation("audit_projection: sample_count >= 1");
    tol.validate();
    Rng rng = make_rng(rng_seed);
    const std::size_t d = set.dim();

    AuditAccumulator nonexp("projection nonexpansive", tol.eps_invariant);
    AuditAccumulator pythag("projection pythagorean", tol.eps_invariant);
    AuditAccumulator variational("projection variational", tol.eps_invariant);

    for (long k = 0; k < sample_count; ++k) {
        const Vector x = sample_box(rng, d, sample_halfwidth);
        const Vector x2 = sample_box(rng, d, sample_halfwidth);
        const Vector y = set.sample_point(rng, sample_halfwidth);
        const Vector px = set.project(x);
        const Vector px2 = set.project(x2);

        // (i) ||Px - Px'|| <= ||x - x'||
        {
            const double scale = std::max(norm(x), norm(x2));
            const double viol = distance(px, px2) - distance(x, x2);
            nonexp.observe(viol / (1.0 + scale * scale), x, x2);
        }
        // (ii) ||x - y||^2 >= ||x - Px||^2 + ||y - Px||^2, y in C
        {
            const double scale = std::max(norm(x), norm(y));
            const double lhs = distance(x, y);
            const double viol =
                std::pow(distance(x, px), 2) + std::pow(distance(y, px), 2) - lhs * lhs;
            pythag.observe(viol / (1.0 + scale * scale), x, y);
        }
        // (iii) <x - Px, y - Px> <= 0, y in C
        {
            const double scale = std::max(norm(x), norm(y));
            const double viol = inner(x - px, y - px);
            variational.observe(viol / (1.0 + scale * scale), x, y);
        }
    }

    return {nonexp.finish(), pythag.finish(), variational.finish()};
}

bool all_passed(const std::vector<AuditReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::string describe(const AuditReport& r) {
    std::string s = r.property_name + ": " + (r.passed ? "pass" : "FAIL") +
                    " (samples=" + std::to_string(r.samples) +
                    ", max_violation=" + format_real(r.max_violation) +
                    ", slack=" + format_real(r.slack) + ")";
    return s;
}

}  // namespace extragrad

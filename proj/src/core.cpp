#include "extragrad/core.hpp"

#include <cstdio>

namespace extragrad {

void require_same_dim(const Vector& u, const Vector& v, const char* where) {
    if (u.dim() != v.dim()) {
        throw ContractViolation(std::string(where) + ": dimension mismatch (" +
                                std::to_string(u.dim()) + " vs " + std::to_string(v.dim()) + ")");
    }
}

double inner(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "inner");
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

double norm(const Vector& u) { return std::sqrt(inner(u, u)); }

Vector combine(double a, const Vector& u, double b, const Vector& v) {
    require_same_dim(u, v, "combine");
    Vector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = a * u[i] + b * v[i];
    return out;
}

Vector operator+(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "operator+");
    Vector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
    return out;
}

Vector operator-(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "operator-");
    Vector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
    return out;
}

Vector operator*(double a, const Vector& u) {
    Vector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = a * u[i];
    return out;
}

bool is_finite(const Vector& u) {
    for (double x : u)
        if (!std::isfinite(x)) return false;
    return true;
}

double distance(const Vector& u, const Vector& v) { return norm(u - v); }

void Tolerance::validate() const {
    if (!(eps_invariant > 0.0 && eps_residual > 0.0 && eps_certificate > 0.0 &&
          eps_feasibility > 0.0)) {
        throw ContractViolation("Tolerance: all slacks must be strictly positive");
    }
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace extragrad

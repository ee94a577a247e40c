#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace extragrad {

// Thrown when a caller breaks a documented precondition (dimension
// mismatch, nonpositive tolerance, invalid operator constant, ...).
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Point of the ambient space R^d. Immutable by convention: library code
/// never mutates a vector it did not create.
class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t d, double fill = 0.0) : c_(d, fill) {}
    Vector(std::initializer_list<double> xs) : c_(xs) {}
    explicit Vector(std::vector<double> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<double>& data() const { return c_; }

    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

  private:
    std::vector<double> c_;
};

void require_same_dim(const Vector& u, const Vector& v, const char* where);

double inner(const Vector& u, const Vector& v);
double norm(const Vector& u);

// a*u + b*v, componentwise.
Vector combine(double a, const Vector& u, double b, const Vector& v);

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double a, const Vector& u);

bool is_finite(const Vector& u);
double distance(const Vector& u, const Vector& v);

/// Slack policy shared by all audits and invariant checks.
struct Tolerance {
    double eps_invariant = 1e-9;    // proof-inequality checks
    double eps_residual = 1e-8;     // stopping threshold
    double eps_certificate = 1e-8;  // audit slack
    double eps_feasibility = 1e-9;  // set membership slack

    void validate() const;
};

// %.17g rendering used by every CSV writer; round-trips doubles exactly.
std::string format_real(double v);

}  // namespace extragrad

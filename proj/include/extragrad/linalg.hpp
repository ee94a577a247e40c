#pragma once

#include <cstddef>
#include <vector>

#include "extragrad/core.hpp"

namespace extragrad {

/// Small dense square matrix, row-major. Problem dimensions here are tiny
/// (config-file sized), so direct O(d^3) solves are fine.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t d, double fill = 0.0) : d_(d), a_(d * d, fill) {}
    explicit Matrix(std::vector<std::vector<double>> rows);

    static Matrix identity(std::size_t d);
    static Matrix diag(const std::vector<double>& entries);

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }

    Vector apply(const Vector& x) const;
    bool is_symmetric(double rel_tol = 1e-12) const;

    std::vector<std::vector<double>> rows() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.d_ == b.d_ && a.a_ == b.a_;
    }

  private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

// Solves M y = b by Gaussian elimination with partial pivoting.
// Throws ContractViolation on a (numerically) singular system.
Vector solve_dense(const Matrix& M, const Vector& b);

// Largest eigenvalue magnitude of a symmetric PSD matrix by power
// iteration, run to the given relative tolerance.
double power_iteration_lambda_max(const Matrix& M, double rel_tol = 1e-10);

// Smallest eigenvalue of a symmetric matrix via the shifted power
// iteration lambda_min = s - lambda_max(s*I - M) with s = lambda_max(M).
double symmetric_lambda_min(const Matrix& M, double rel_tol = 1e-10);

}  // namespace extragrad

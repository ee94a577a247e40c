#include "extragrad/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace extragrad {

Matrix::Matrix(std::vector<std::vector<double>> rows) : d_(rows.size()), a_(d_ * d_) {
    for (std::size_t i = 0; i < d_; ++i) {
        if (rows[i].size() != d_) throw ContractViolation("Matrix: rows must form a square matrix");
        for (std::size_t j = 0; j < d_; ++j) a_[i * d_ + j] = rows[i][j];
    }
}

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.dim() != d_) throw ContractViolation("Matrix::apply: dimension mismatch");
    Vector y(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d_; ++j) s += a_[i * d_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

bool Matrix::is_symmetric(double rel_tol) const {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::fabs(v));
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > rel_tol * (1.0 + scale)) return false;
    return true;
}

std::vector<std::vector<double>> Matrix::rows() const {
    std::vector<std::vector<double>> out(d_, std::vector<double>(d_));
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

Vector solve_dense(const Matrix& M, const Vector& b) {
    const std::size_t d = M.dim();
    if (b.dim() != d) throw ContractViolation("solve_dense: dimension mismatch");
    // augmented copy
    std::vector<double> a(d * d);
    std::vector<double> rhs(b.begin(), b.end());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] = M(i, j);

    for (std::size_t k = 0; k < d; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < d; ++i)
            if (std::fabs(a[i * d + k]) > std::fabs(a[piv * d + k])) piv = i;
        if (std::fabs(a[piv * d + k]) < 1e-300)
            throw ContractViolation("solve_dense: singular system");
        if (piv != k) {
            for (std::size_t j = 0; j < d; ++j) std::swap(a[k * d + j], a[piv * d + j]);
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            const double f = a[i * d + k] / a[k * d + k];
            if (f == 0.0) continue;
            for (std::size_t j = k; j < d; ++j) a[i * d + j] -= f * a[k * d + j];
            rhs[i] -= f * rhs[k];
        }
    }
    Vector y(d);
    for (std::size_t i = d; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < d; ++j) s -= a[i * d + j] * y[j];
        y[i] = s / a[i * d + i];
    }
    return y;
}

namespace {

double gershgorin_radius(const Matrix& M) {
    double g = 0.0;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < M.dim(); ++j) row += std::fabs(M(i, j));
        g = std::max(g, row);
    }
    return g;
}

}  // namespace

double power_iteration_lambda_max(const Matrix& M, double rel_tol) {
    const std::size_t d = M.dim();
    if (d == 0) return 0.0;
    // Shift by the Gershgorin radius so the iterate matrix is PSD and the
    // dominant eigenvalue is the algebraic maximum, then shift back.
    const double g = gershgorin_radius(M);
    Matrix S = M;
    for (std::size_t i = 0; i < d; ++i) S(i, i) += g;

    // fixed deterministic start with all modes excited
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = 1.0 + 0.013 * static_cast<double>(i + 1);
    const double nv = norm(v);
    for (std::size_t i = 0; i < d; ++i) v[i] /= nv;

    double lambda = 0.0;
    for (int it = 0; it < 200000; ++it) {
        Vector w = S.apply(v);
        const double nw = norm(w);
        if (nw == 0.0) return -g;  // start vector in the kernel of S
        for (std::size_t i = 0; i < d; ++i) w[i] /= nw;
        const double next = inner(w, S.apply(w));
        if (it > 0 && std::fabs(next - lambda) <= rel_tol * (std::fabs(next) + 1e-300)) {
            return next - g;
        }
        lambda = next;
        v = w;
    }
    return lambda - g;
}

double symmetric_lambda_min(const Matrix& M, double rel_tol) {
    Matrix neg(M.dim());
    for (std::size_t i = 0; i < M.dim(); ++i)
        for (std::size_t j = 0; j < M.dim(); ++j) neg(i, j) = -M(i, j);
    return -power_iteration_lambda_max(neg, rel_tol);
}

}  // namespace extragrad

#include "totalrank/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "totalrank/errors.hpp"

namespace totalrank {

DenseMatrix::DenseMatrix(std::size_t n, double fill) : n_(n), a_(n * n, fill) {}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw DimensionError("dense matrix needs n*n entries");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionError("dense matrix must be square");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
    DenseMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

double DenseMatrix::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

DenseMatrix DenseMatrix::abs() const {
    DenseMatrix r = *this;
    for (double& x : r.a_) x = std::abs(x);
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("dense matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("dense matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
    for (double& x : a_) x *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionError("dense matrix size mismatch");
    const std::size_t n = lhs.n_;
    DenseMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = lhs(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * rhs(k, j);
        }
    }
    return r;
}

std::vector<double> operator*(const DenseMatrix& m, std::span<const double> v) {
    if (v.size() != m.n_) throw DimensionError("dense matvec size mismatch");
    std::vector<double> r(m.n_, 0.0);
    for (std::size_t i = 0; i < m.n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n_; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

DenseMatrix to_dense(const TransitionMatrix& h) {
    DenseMatrix m(h.size());
    const auto col_ptr = h.col_ptr();
    const auto rows = h.row_indices();
    const auto vals = h.values();
    for (std::size_t j = 0; j < h.size(); ++j)
        for (std::size_t k = col_ptr[j]; k < col_ptr[j + 1]; ++k) m(rows[k], j) += vals[k];
    return m;
}

// --- LU ---

LuFactorization::LuFactorization(const DenseMatrix& a) : lu_(a), perm_(a.size()) {
    const std::size_t n = a.size();
    if (n == 0) throw DimensionError("cannot factor an empty matrix");
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const double threshold = kPivotTolerance * a.max_abs();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                p = i;
            }
        }
        if (!(best > threshold)) {
            throw SingularMatrixError("matrix is singular to working precision (pivot " + std::to_string(best) +
                                      " at column " + std::to_string(k) + ")");
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
    const std::size_t n = lu_.size();
    if (b.size() != n) throw DimensionError("right-hand side size mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
        x[i] /= lu_(i, i);
    }
    return x;
}

DenseMatrix LuFactorization::inverse() const {
    const std::size_t n = lu_.size();
    DenseMatrix inv(n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const auto col = solve(e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

DenseMatrix expm_taylor(const DenseMatrix& m) {
    const std::size_t n = m.size();
    // Scale so the norm is at most 1/2, sum the series, then square back.
    int squarings = 0;
    double norm = m.norm1();
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    const DenseMatrix scaled = m * std::ldexp(1.0, -squarings);

    DenseMatrix result = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (int k = 1; k < 60; ++k) {
        term = term * scaled;
        term *= 1.0 / k;
        result += term;
        if (term.max_abs() <= 1e-18 * result.max_abs()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace totalrank

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "totalrank/graph_io.hpp"

namespace totalrank {

/// Small dense square matrix, row-major. Sized for verification work
/// (n up to a few hundred), not for production solves.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double fill = 0.0);
    /// Row-major entries; throws DimensionError unless entries.size() == n*n.
    DenseMatrix(std::size_t n, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> diag);

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<const double> entries() const noexcept { return a_; }

    /// Largest absolute entry.
    double max_abs() const;
    /// Induced 1-norm (max absolute column sum).
    double norm1() const;
    DenseMatrix abs() const;
    DenseMatrix transpose() const;

    DenseMatrix& operator+=(const DenseMatrix& rhs);
    DenseMatrix& operator-=(const DenseMatrix& rhs);
    DenseMatrix& operator*=(double s);

    friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
    friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
    friend DenseMatrix operator*(DenseMatrix m, double s) { return m *= s; }
    friend DenseMatrix operator*(double s, DenseMatrix m) { return m *= s; }
    friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend std::vector<double> operator*(const DenseMatrix& m, std::span<const double> v);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

DenseMatrix to_dense(const TransitionMatrix& h);

/// Gaussian elimination with partial pivoting, factored once and reused.
class LuFactorization {
public:
    /// Relative pivot threshold: a pivot below kPivotTolerance * max|A| is singular.
    static constexpr double kPivotTolerance = 1e-12;

    /// Throws SingularMatrixError when a pivot falls below the threshold.
    explicit LuFactorization(const DenseMatrix& a);

    std::size_t size() const noexcept { return lu_.size(); }
    std::vector<double> solve(std::span<const double> b) const;
    DenseMatrix inverse() const;

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// exp(M) by Taylor series with scaling and squaring; used as an independent
/// check on matrix-logarithm results.
DenseMatrix expm_taylor(const DenseMatrix& m);

}  // namespace totalrank

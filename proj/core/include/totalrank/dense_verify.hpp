#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "totalrank/dense_matrix.hpp"
#include "totalrank/pagerank.hpp"

namespace totalrank {

/// Largest spectral-radius estimate accepted by the logarithm series and the
/// closed form. Keeps the series below a few hundred terms at tol = 1e-10.
inline constexpr double kSpectralGuard = 0.9;
/// Power-iteration steps used when the guard is checked internally.
inline constexpr std::size_t kGuardIterations = 500;

struct DenseInverse {
    DenseMatrix inverse;
    /// ||M * inverse - I||_max
    double residual = 0.0;
};

/// Inverse by partial-pivot Gaussian elimination. Throws SingularMatrixError
/// for a pivot below 1e-12 * ||M||_max.
DenseInverse dense_inverse(const DenseMatrix& m);

/// Estimate of rho(M): power iteration on |M| from the uniform vector,
/// returning the last L1 growth ratio. Not a certificate.
double spectral_radius_estimate(const DenseMatrix& m, std::size_t iters);

/// ||(I - aM) sum_{i=0}^{K} (aM)^i - I||_max for column-stochastic M.
/// Telescoping leaves (aM)^{K+1}, so the result is at most a^{K+1}.
double neumann_residual(const DenseMatrix& m, DampingFactor alpha, std::size_t k);

/// Number of terms K for which r^{K+1} / ((K+1)(1-r)) <= tol.
std::size_t mercator_terms(double r, double tol);

/// log(I - M) = -sum_{t>=1} M^t / t, truncated by mercator_terms. Throws
/// DomainError when the spectral-radius estimate exceeds kSpectralGuard.
DenseMatrix mercator_log(const DenseMatrix& m, double tol);

/// M^{-1} [I + (M^{-1} - I) log(I - M)] o0 for invertible M inside the guard.
/// error_bound is a propagated estimate (certified = false).
RankResult closed_form_totalrank(const DenseMatrix& m, std::span<const double> o0, double tol);

/// sum_{t=0}^{T} M^t / (t + shift), shift in {1, 2}, by brute force.
DenseMatrix shifted_series_lhs(const DenseMatrix& m, int shift, std::size_t terms);

// --- identity suite ---

inline constexpr std::uint64_t kDefaultVerifySeed = 20240917;

struct VerifySuiteConfig {
    std::size_t n = 8;
    std::size_t trials = 10;
    std::uint64_t seed = kDefaultVerifySeed;
};

struct IdentityCheck {
    std::string name;
    std::string description;
    /// Residual of the worst case (largest residual / threshold ratio).
    double max_residual = 0.0;
    /// Threshold that applied to that case.
    double threshold = 0.0;
    std::size_t cases = 0;
    bool passed = true;
};

/// Runs the Neumann, logarithm, shifted-series, closed-form and scalar
/// identities on seeded random matrices inside the guard.
std::vector<IdentityCheck> run_identity_suite(const VerifySuiteConfig& cfg);

}  // namespace totalrank

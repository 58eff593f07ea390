#include "totalrank/dense_verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "totalrank/errors.hpp"
#include "totalrank/random_models.hpp"
#include "totalrank/series.hpp"

namespace totalrank {

namespace {

void require_square(const DenseMatrix& m) {
    if (m.size() == 0) throw DimensionError("matrix must be nonempty");
}

double check_guard(const DenseMatrix& m) {
    const double r = spectral_radius_estimate(m, kGuardIterations);
    if (r > kSpectralGuard) {
        throw DomainError("spectral radius estimate " + std::to_string(r) + " exceeds " +
                          std::to_string(kSpectralGuard) +
                          "; the series log(I - M) = -sum M^t/t needs rho(M) < 1 and is only used below the guard");
    }
    return r;
}

bool is_column_stochastic(const DenseMatrix& m, double tol) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m(i, j) < -tol) return false;
            sum += m(i, j);
        }
        if (std::abs(sum - 1.0) > tol) return false;
    }
    return true;
}

}  // namespace

DenseInverse dense_inverse(const DenseMatrix& m) {
    require_square(m);
    DenseInverse out{LuFactorization(m).inverse(), 0.0};
    out.residual = (m * out.inverse - DenseMatrix::identity(m.size())).max_abs();
    return out;
}

double spectral_radius_estimate(const DenseMatrix& m, std::size_t iters) {
    require_square(m);
    const std::size_t n = m.size();
    const DenseMatrix a = m.abs();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    double ratio = 0.0;
    for (std::size_t k = 0; k < std::max<std::size_t>(iters, 1); ++k) {
        auto w = a * std::span<const double>(v);
        ratio = l1_norm(w);  // v has unit L1 norm
        if (ratio == 0.0) return 0.0;
        for (double& x : w) x /= ratio;
        v = std::move(w);
    }
    return ratio;
}

double neumann_residual(const DenseMatrix& m, DampingFactor alpha, std::size_t k) {
    require_square(m);
    if (!is_column_stochastic(m, 1e-10)) throw DomainError("neumann_residual expects a column-stochastic matrix");
    const std::size_t n = m.size();
    const DenseMatrix am = alpha.value() * m;
    DenseMatrix power = DenseMatrix::identity(n);
    DenseMatrix sum = power;
    for (std::size_t i = 1; i <= k; ++i) {
        power = power * am;
        sum += power;
    }
    return ((DenseMatrix::identity(n) - am) * sum - DenseMatrix::identity(n)).max_abs();
}

std::size_t mercator_terms(double r, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    r = std::clamp(r, 0.0, kSpectralGuard);
    std::size_t k = 0;
    while (std::pow(r, static_cast<double>(k + 1)) / (static_cast<double>(k + 1) * (1.0 - r)) > tol) ++k;
    return k;
}

DenseMatrix mercator_log(const DenseMatrix& m, double tol) {
    require_square(m);
    const double r = check_guard(m);
    const std::size_t terms = mercator_terms(r, tol);

    DenseMatrix result(m.size());
    DenseMatrix power = DenseMatrix::identity(m.size());
    for (std::size_t t = 1; t <= terms; ++t) {
        power = power * m;
        result -= power * (1.0 / static_cast<double>(t));
    }
    return result;
}

RankResult closed_form_totalrank(const DenseMatrix& m, std::span<const double> o0, double tol) {
    require_square(m);
    const std::size_t n = m.size();
    if (o0.size() != n) throw DimensionError("vector does not match matrix dimension");
    check_guard(m);

    const DenseInverse inv = dense_inverse(m);
    const DenseMatrix log_term = mercator_log(m, tol);
    const DenseMatrix inv_minus_id = inv.inverse - DenseMatrix::identity(n);

    // M^{-1} [o0 + (M^{-1} - I) log(I - M) o0]
    auto inner = inv_minus_id * std::span<const double>(log_term * o0);
    for (std::size_t i = 0; i < n; ++i) inner[i] += o0[i];

    RankResult result;
    result.method = RankMethod::ClosedForm;
    result.vector = inv.inverse * std::span<const double>(inner);
    result.iterations_or_terms = mercator_terms(spectral_radius_estimate(m, kGuardIterations), tol);
    const double o0_norm = l1_norm(o0);
    result.error_bound = inv.inverse.norm1() * inv_minus_id.norm1() * tol * o0_norm * static_cast<double>(n) +
                         inv.residual * static_cast<double>(n) * l1_norm(result.vector);
    result.certified = false;
    return result;
}

DenseMatrix shifted_series_lhs(const DenseMatrix& m, int shift, std::size_t terms) {
    require_square(m);
    if (shift != 1 && shift != 2) throw DomainError("shift must be 1 or 2");
    check_guard(m);
    DenseMatrix power = DenseMatrix::identity(m.size());
    DenseMatrix sum = power * (1.0 / shift);
    for (std::size_t t = 1; t <= terms; ++t) {
        power = power * m;
        sum += power * (1.0 / (static_cast<double>(t) + shift));
    }
    return sum;
}

// --- identity suite ---

namespace {

void record(IdentityCheck& check, double residual, double threshold) {
    ++check.cases;
    const bool ok = residual <= threshold;
    const double ratio = residual / threshold;
    if (check.cases == 1 || ratio > check.max_residual / check.threshold) {
        check.max_residual = residual;
        check.threshold = threshold;
    }
    check.passed = check.passed && ok;
}

// sum_{t=0}^{T} coefficient(t) M^t o0 with T taken from the combined
// coefficient and geometric tail r^{T+1} / ((T+2)(T+3)(1-r)) <= 1e-13.
std::vector<double> brute_force_totalrank(const DenseMatrix& m, std::span<const double> o0) {
    const double r = std::min(std::max(spectral_radius_estimate(m, kGuardIterations), m.norm1()), 0.999);
    std::size_t terms = 0;
    while (std::pow(r, terms + 1.0) / ((terms + 2.0) * (terms + 3.0) * (1.0 - r)) > 1e-13) ++terms;
    std::vector<double> power(o0.begin(), o0.end());
    std::vector<double> sum(o0.size(), 0.0);
    for (std::size_t t = 0; t <= terms; ++t) {
        const double c = coefficient(t);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * power[i];
        power = m * std::span<const double>(power);
    }
    return sum;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const VerifySuiteConfig& cfg) {
    if (cfg.n < 1) throw DomainError("verify: n must be positive");
    if (cfg.trials < 1) throw DomainError("verify: trials must be positive");

    constexpr double kLogTol = 1e-13;
    constexpr std::size_t kShiftTerms = 500;

    IdentityCheck neumann{"neumann", "(I - aH) sum_{i<=K} (aH)^i = I up to a^{K+1}", 0, 0, 0, true};
    IdentityCheck logarithm{"log-series", "exp(log(I - M)) = I - M", 0, 0, 0, true};
    IdentityCheck shifted1{"shifted-1", "sum M^t/(t+1) = -M^{-1} log(I - M)", 0, 0, 0, true};
    IdentityCheck shifted2{"shifted-2", "sum M^t/(t+2) = -M^{-2} log(I - M) - M^{-1}", 0, 0, 0, true};
    IdentityCheck closed{"closed-form", "M^{-1}[I + (M^{-1} - I) log(I - M)] o0 = sum c_t M^t o0", 0, 0, 0, true};
    IdentityCheck scalar{"scalar", "M = bI reduces to ((1-b) ln(1-b) + b) / b^2", 0, 0, 0, true};

    Rng rng(cfg.seed);
    const std::size_t n = cfg.n;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const DenseMatrix h = random_column_stochastic(n, rng);
        for (double a : {0.5, 0.9}) {
            for (std::size_t k : {10, 50, 100}) {
                record(neumann, neumann_residual(h, DampingFactor(a), k), std::pow(a, k + 1.0) + 1e-12);
            }
        }

        const DenseMatrix m = random_guarded_matrix(n, 0.3, 0.8, rng);
        const DenseMatrix id = DenseMatrix::identity(n);
        const DenseMatrix log_term = mercator_log(m, kLogTol);
        record(logarithm, (expm_taylor(log_term) - (id - m)).max_abs(), 10.0 * kLogTol + 1e-14);

        const DenseMatrix inv = dense_inverse(m).inverse;
        record(shifted1, (shifted_series_lhs(m, 1, kShiftTerms) + inv * log_term).max_abs(), 1e-8);
        record(shifted2, (shifted_series_lhs(m, 2, kShiftTerms) + inv * inv * log_term + inv).max_abs(), 1e-8);

        std::vector<double> o0(n);
        for (double& x : o0) x = rng.uniform(0.01, 1.0);
        const double total = l1_norm(o0);
        for (double& x : o0) x /= total;
        const auto closed_vec = closed_form_totalrank(m, o0, kLogTol).vector;
        record(closed, l1_distance(closed_vec, brute_force_totalrank(m, o0)), 1e-6);
    }

    for (double beta : {0.1, 0.3, 0.5, 0.7, 0.89}) {
        const DenseMatrix m = beta * DenseMatrix::identity(n);
        const std::vector<double> o0(n, 1.0 / static_cast<double>(n));
        const auto got = closed_form_totalrank(m, o0, kLogTol).vector;
        const double s = ((1.0 - beta) * std::log1p(-beta) + beta) / (beta * beta);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(got[i] - s * o0[i]));
        record(scalar, err, 1e-10);
    }

    return {neumann, logarithm, shifted1, shifted2, closed, scalar};
}

}  // namespace totalrank

#include "totalrank/pagerank.hpp"

#include <cmath>
#include <string>

#include "totalrank/errors.hpp"

namespace totalrank {

DampingFactor::DampingFactor(double alpha) : alpha_(alpha) {
    if (!(alpha > kEndpointMargin) || !(alpha < 1.0 - kEndpointMargin)) {
        throw DomainError("damping factor must lie strictly inside (0, 1), got " + std::to_string(alpha));
    }
}

std::string_view to_string(RankMethod m) {
    switch (m) {
        case RankMethod::PowerIteration: return "power";
        case RankMethod::Unrolled: return "unrolled";
        case RankMethod::DenseSolve: return "dense";
        case RankMethod::Series: return "series";
        case RankMethod::Quadrature: return "quadrature";
        case RankMethod::ClosedForm: return "closed-form";
    }
    return "unknown";
}

std::size_t default_max_iter(DampingFactor alpha, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const double a = alpha.value();
    const double steps = std::ceil(std::log(tol * (1.0 - a)) / std::log(a));
    return static_cast<std::size_t>(std::max(steps, 0.0)) + 10;
}

RankResult power_iteration(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha, double tol,
                           std::size_t max_iter, const StepObserver& observer) {
    const std::size_t n = h.size();
    if (o0.size() != n) throw DimensionError("teleport vector does not match matrix dimension");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (max_iter == 0) throw DomainError("max_iter must be positive");

    const double a = alpha.value();
    const double step_threshold = tol * (1.0 - a) / a;
    const auto teleport = o0.values();

    std::vector<double> current(teleport.begin(), teleport.end());
    std::vector<double> next(n);

    RankResult result;
    result.method = RankMethod::PowerIteration;
    result.converged = false;
    double step = 0.0;
    std::size_t t = 0;
    while (t < max_iter) {
        matvec(h, current, next);
        step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = a * next[i] + (1.0 - a) * teleport[i];
            step += std::abs(next[i] - current[i]);
        }
        current.swap(next);
        ++t;
        if (observer) observer(t, step);
        if (step <= step_threshold) {
            result.converged = true;
            break;
        }
    }
    result.vector = std::move(current);
    result.iterations_or_terms = t;
    result.error_bound = a / (1.0 - a) * step;
    return result;
}

RankResult power_iteration(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha, double tol) {
    return power_iteration(h, o0, alpha, tol, default_max_iter(alpha, tol));
}

std::vector<double> unrolled_form(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha,
                                  std::size_t t) {
    const std::size_t n = h.size();
    if (o0.size() != n) throw DimensionError("teleport vector does not match matrix dimension");
    const double a = alpha.value();

    std::vector<double> power(o0.values().begin(), o0.values().end());  // (aH)^i o0
    std::vector<double> sum(n, 0.0);
    std::vector<double> scratch(n);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t k = 0; k < n; ++k) sum[k] += power[k];
        matvec(h, power, scratch);
        for (std::size_t k = 0; k < n; ++k) power[k] = a * scratch[k];
    }
    for (std::size_t k = 0; k < n; ++k) power[k] += (1.0 - a) * sum[k];
    return power;
}

RankResult dense_solve(const DenseMatrix& h, const StochasticVector& o0, DampingFactor alpha) {
    const std::size_t n = h.size();
    if (n == 0 || o0.size() != n) throw DimensionError("teleport vector does not match matrix dimension");
    const double a = alpha.value();

    DenseMatrix system = DenseMatrix::identity(n) - a * h;
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = (1.0 - a) * o0[i];

    const LuFactorization lu(system);
    RankResult result;
    result.method = RankMethod::DenseSolve;
    result.vector = lu.solve(rhs);
    result.iterations_or_terms = 0;

    const auto applied = system * std::span<const double>(result.vector);
    result.error_bound = l1_distance(applied, rhs);
    return result;
}

}  // namespace totalrank

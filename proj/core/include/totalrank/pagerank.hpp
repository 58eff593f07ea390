#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "totalrank/dense_matrix.hpp"
#include "totalrank/graph_io.hpp"

namespace totalrank {

/// Damping factor strictly inside (0, 1). Values within kEndpointMargin of
/// either endpoint are rejected so that the (1 - alpha) / alpha bounds stay finite.
class DampingFactor {
public:
    static constexpr double kEndpointMargin = 1e-12;

    explicit DampingFactor(double alpha);

    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

enum class RankMethod { PowerIteration, Unrolled, DenseSolve, Series, Quadrature, ClosedForm };

std::string_view to_string(RankMethod m);

struct RankResult {
    std::vector<double> vector;
    RankMethod method = RankMethod::PowerIteration;
    std::size_t iterations_or_terms = 0;
    /// L1 error bound. Its meaning depends on the method; see `certified`.
    double error_bound = 0.0;
    bool renormalized = false;
    /// False when an iteration cap was hit before the tolerance was certified.
    bool converged = true;
    /// True when error_bound is a proven bound rather than an estimate.
    bool certified = true;
};

/// Called after each power-iteration step with (step index, ||o_{t+1} - o_t||_1).
using StepObserver = std::function<void(std::size_t, double)>;

/// ceil(log(tol * (1 - alpha)) / log(alpha)) + 10.
std::size_t default_max_iter(DampingFactor alpha, double tol);

/// Iterates o <- alpha H o + (1 - alpha) o0 from o0. Stops once the step is at
/// most tol (1 - alpha) / alpha, which certifies ||o - o_inf||_1 <= tol.
/// When max_iter is exhausted first the best iterate is returned with
/// converged = false and its (larger) bound.
RankResult power_iteration(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha, double tol,
                           std::size_t max_iter, const StepObserver& observer = {});
RankResult power_iteration(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha, double tol);

/// (alpha H)^t o0 + (1 - alpha) sum_{i<t} (alpha H)^i o0, using exactly t products.
/// Reference path for checking the recursion; not meant for production use.
std::vector<double> unrolled_form(const TransitionMatrix& h, const StochasticVector& o0, DampingFactor alpha,
                                  std::size_t t);

/// Solves (I - alpha H) x = (1 - alpha) o0 directly. error_bound is the L1 residual.
RankResult dense_solve(const DenseMatrix& h, const StochasticVector& o0, DampingFactor alpha);

}  // namespace totalrank

#pragma once

#include <cstddef>
#include <vector>

#include "totalrank/graph_io.hpp"
#include "totalrank/pagerank.hpp"

namespace totalrank {

/// Truncation policy for the damping-free coefficient series.
struct SeriesConfig {
    /// Target L1 tail; must lie in (0, 1). Cost grows like 1/tol matvecs.
    double tol = 1e-4;
    std::size_t max_terms = 100'000'000;
    bool renormalize = true;

    void validate() const;
};

/// Weight of H^t o0 after averaging PageRank over the damping factor:
/// the integral of (1 - a) a^t over [0, 1], i.e. 1/(t+1) - 1/(t+2),
/// evaluated as 1/((t+1)(t+2)).
double coefficient(std::size_t t);

/// Sum of the first T coefficients, 1 - 1/(T+1). This is also the exact L1
/// mass of the unnormalized T-term partial sum.
double partial_mass(std::size_t terms);

/// Smallest T >= 1 with 1/(T+1) <= tol.
std::size_t terms_for_tolerance(double tol);

/// sum_{t<terms} coefficient(t) H^t o0, unnormalized, one matvec per term.
/// Accumulates in ascending t with a single accumulator.
std::vector<double> series_partial_sum(const TransitionMatrix& h, const StochasticVector& o0, std::size_t terms);

/// TotalRank via the truncated coefficient series. The tail of the series has
/// L1 mass exactly 1/(T+1), which is reported as a certified error_bound.
/// If the required T exceeds cfg.max_terms the sum is cut there and the result
/// carries converged = false.
RankResult series_sum(const TransitionMatrix& h, const StochasticVector& o0, const SeriesConfig& cfg = {});

}  // namespace totalrank

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "totalrank/graph_io.hpp"
#include "totalrank/pagerank.hpp"

namespace totalrank {

enum class InnerMethod { PowerIteration, DenseSolve };

struct QuadratureConfig {
    /// Largest n for which the automatic inner method is a dense solve.
    static constexpr std::size_t kDenseAutoLimit = 256;

    std::size_t nodes_per_panel = 16;
    std::size_t panels = 8;
    /// Geometric grading toward alpha = 1; must exceed 1.
    double grading = 2.0;
    /// Tolerance of each per-node PageRank solve.
    double inner_tol = 1e-12;
    /// Unset picks DenseSolve for n <= kDenseAutoLimit, PowerIteration otherwise.
    std::optional<InnerMethod> inner_method;

    void validate() const;
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending, in (-1, 1)
    std::vector<double> weights;  // positive, sum to 2
};

/// k-point Gauss-Legendre rule on [-1, 1], 1 <= k <= 64. Nodes are refined by
/// Newton iteration from Chebyshev initial guesses.
GaussLegendreRule gauss_legendre(std::size_t k);

/// Panel breakpoints 0 = b_0 < ... < b_P = 1 with b_j proportional to 1 - grading^-j.
std::vector<double> graded_breakpoints(std::size_t panels, double grading);

/// Damping factors and weights of the composite rule on (0, 1).
struct AlphaRule {
    std::vector<double> alphas;
    std::vector<double> weights;
};
AlphaRule composite_alpha_rule(const QuadratureConfig& cfg);

/// Integrates the PageRank vector (1 - a)(I - a H)^{-1} o0 over a in (0, 1).
/// error_bound is a heuristic estimate from re-running with every panel bisected
/// (certified = false).
RankResult marginalize_pagerank(const TransitionMatrix& h, const StochasticVector& o0,
                                const QuadratureConfig& cfg = {});

}  // namespace totalrank

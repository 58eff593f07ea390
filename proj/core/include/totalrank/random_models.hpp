#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "totalrank/dense_matrix.hpp"
#include "totalrank/graph_io.hpp"

namespace totalrank {

/// Seeded generator whose real-valued draws do not depend on the standard
/// library's distribution implementations, so seeded output is portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

private:
    std::mt19937_64 engine_;
};

/// Each ordered pair (i, j) becomes an edge with probability `density`,
/// weight uniform in [0.5, 2). Dangling nodes and self-loops can occur.
GraphEdges random_graph(std::size_t n, double density, Rng& rng);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 plus `extra_edges` random edges,
/// all with weights uniform in [0.5, 2).
GraphEdges random_strongly_connected_graph(std::size_t n, std::size_t extra_edges, Rng& rng);

/// Dense column-stochastic matrix with strictly positive entries.
DenseMatrix random_column_stochastic(std::size_t n, Rng& rng);

/// beta * H with H column-stochastic and diagonal weight in [0.6, 0.9], beta
/// uniform in [beta_lo, beta_hi]. Column dominance keeps every eigenvalue at
/// least 0.2 beta away from zero, so these matrices are safely invertible, and
/// the spectral-radius estimate of beta * H is exactly beta.
DenseMatrix random_guarded_matrix(std::size_t n, double beta_lo, double beta_hi, Rng& rng);

}  // namespace totalrank

#pragma once

#include <vector>

#include "totalrank/dense_matrix.hpp"
#include "totalrank/graph_io.hpp"
#include "oracles.hpp"

namespace totalrank::testing {

// Values below were computed independently (mpmath, 30 digits) and frozen.
inline constexpr double kLn2 = 0.693147180559945309417;
/// ((1-b) ln(1-b) + b) / b^2 at b = 0.5
inline constexpr double kScalarHalf = 0.613705638880109381166;
/// sum_t M^t/(t+1) and sum_t M^t/(t+2) at M = 0.5
inline constexpr double kShift1Half = 1.38629436111989061883;
inline constexpr double kShift2Half = 0.772588722239781237669;
/// TotalRank series of 0.6 * (2-cycle) applied to (1, 0)
inline constexpr double kCycle06First = 0.535402102838215083011;
inline constexpr double kCycle06Second = 0.113163750634945955674;

inline GraphEdges two_cycle() { return GraphEdges{2, {{0, 1, 1.0}, {1, 0, 1.0}}}; }
inline GraphEdges self_loop() { return GraphEdges{1, {{0, 0, 1.0}}}; }

inline TransitionMatrix build(const GraphEdges& g) {
    return build_transition(g, StochasticVector::uniform(g.node_count));
}

inline oracle::Matrix to_oracle(const DenseMatrix& m) {
    oracle::Matrix r = oracle::zeros(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
    return r;
}

inline std::vector<double> to_vec(const StochasticVector& v) { return {v.values().begin(), v.values().end()}; }

}  // namespace totalrank::testing

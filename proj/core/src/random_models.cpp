#include "totalrank/random_models.hpp"

#include "totalrank/errors.hpp"

namespace totalrank {

GraphEdges random_graph(std::size_t n, double density, Rng& rng) {
    GraphEdges g;
    g.node_count = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.uniform() < density)
                g.edges.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), rng.uniform(0.5, 2.0)});
    return g;
}

GraphEdges random_strongly_connected_graph(std::size_t n, std::size_t extra_edges, Rng& rng) {
    if (n == 0) throw ValidationError("graph needs at least one node");
    GraphEdges g;
    g.node_count = n;
    for (std::size_t i = 0; i < n; ++i) {
        g.edges.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>((i + 1) % n), rng.uniform(0.5, 2.0)});
    }
    for (std::size_t e = 0; e < extra_edges; ++e) {
        const auto src = static_cast<NodeIndex>(rng.index(n));
        const auto dst = static_cast<NodeIndex>(rng.index(n));
        g.edges.push_back({src, dst, rng.uniform(0.5, 2.0)});
    }
    return g;
}

DenseMatrix random_column_stochastic(std::size_t n, Rng& rng) {
    DenseMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = rng.uniform(0.01, 1.0);
            sum += m(i, j);
        }
        for (std::size_t i = 0; i < n; ++i) m(i, j) /= sum;
    }
    return m;
}

DenseMatrix random_guarded_matrix(std::size_t n, double beta_lo, double beta_hi, Rng& rng) {
    DenseMatrix h(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double diag = n == 1 ? 1.0 : rng.uniform(0.6, 0.9);
        h(j, j) = diag;
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            h(i, j) = rng.uniform(0.01, 1.0);
            off += h(i, j);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) h(i, j) *= (1.0 - diag) / off;
    }
    return rng.uniform(beta_lo, beta_hi) * h;
}

}  // namespace totalrank

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

namespace totalrank {

using NodeIndex = std::uint32_t;

/// Largest node index accepted by the parser.
inline constexpr std::uint64_t kMaxNodeIndex = 0x7ffffffe;

struct Edge {
    NodeIndex src = 0;
    NodeIndex dst = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed weighted edge list over dense 0-based node indices.
struct GraphEdges {
    std::size_t node_count = 0;
    std::vector<Edge> edges;

    friend bool operator==(const GraphEdges&, const GraphEdges&) = default;
};

/// Nonnegative vector whose entries sum to one (within 1e-12).
class StochasticVector {
public:
    static constexpr double kSumTolerance = 1e-12;

    /// Validates `values`; throws ValidationError when an entry is negative or
    /// the sum is off by more than kSumTolerance.
    explicit StochasticVector(std::vector<double> values);

    static StochasticVector uniform(std::size_t n);
    static StochasticVector unit(std::size_t n, std::size_t index);
    /// Divides nonnegative weights by their sum.
    static StochasticVector from_weights(std::vector<double> weights);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// Sparse column-stochastic transition matrix in compressed-column form.
///
/// Column j holds the probabilities of moving from node j to every other
/// node, so H * v maps stochastic vectors to stochastic vectors.
class TransitionMatrix {
public:
    TransitionMatrix(std::size_t n, std::vector<std::size_t> col_ptr, std::vector<NodeIndex> row_idx,
                     std::vector<double> values, std::vector<NodeIndex> dangling_columns);

    std::size_t size() const noexcept { return n_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }

    std::span<const std::size_t> col_ptr() const noexcept { return col_ptr_; }
    std::span<const NodeIndex> row_indices() const noexcept { return row_idx_; }
    std::span<const double> values() const noexcept { return values_; }
    /// Columns that had zero out-weight and were replaced by the teleport vector.
    std::span<const NodeIndex> dangling_columns() const noexcept { return dangling_; }

    /// Entry (row, col); zero when not stored.
    double at(std::size_t row, std::size_t col) const;
    double column_sum(std::size_t col) const;

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::size_t> col_ptr_;
    std::vector<NodeIndex> row_idx_;
    std::vector<double> values_;
    std::vector<NodeIndex> dangling_;
};

/// Parses `src dst [weight]` lines. `#` starts a comment; an optional
/// `%nodes N` header raises the node count to at least N.
GraphEdges parse_edge_list(std::istream& in);
GraphEdges parse_edge_list(std::string_view text);

/// Reads one nonnegative weight per line and normalizes to a stochastic vector.
StochasticVector parse_teleport(std::istream& in);

TransitionMatrix build_transition(const GraphEdges& graph, const StochasticVector& teleport);

/// y = H * v. Accumulates in ascending column order, then ascending row
/// within a column, so results are bitwise reproducible.
std::vector<double> matvec(const TransitionMatrix& h, std::span<const double> v);
void matvec(const TransitionMatrix& h, std::span<const double> v, std::span<double> out);

double l1_norm(std::span<const double> v);
double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace totalrank

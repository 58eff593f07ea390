#include "totalrank/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "totalrank/errors.hpp"

namespace totalrank {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t parse_index(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ValidationError("line " + std::to_string(line) + ": node index '" + std::string(token) + "' overflows");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "malformed node index '" + std::string(token) + "'");
    }
    if (value > kMaxNodeIndex) {
        throw ValidationError("line " + std::to_string(line) + ": node index " + std::string(token) +
                              " exceeds the supported maximum " + std::to_string(kMaxNodeIndex));
    }
    return value;
}

double parse_weight(std::string_view token, std::size_t line) {
    // from_chars rejects a leading '+', which is otherwise valid input
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "malformed weight '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ValidationError("line " + std::to_string(line) + ": weight must be finite");
    }
    if (value < 0.0) {
        throw ValidationError("line " + std::to_string(line) + ": negative weight " + std::string(token));
    }
    return value;
}

}  // namespace

// --- StochasticVector ---

StochasticVector::StochasticVector(std::vector<double> values) : values_(std::move(values)) {
    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ValidationError("stochastic vector entries must be finite and nonnegative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw ValidationError("stochastic vector must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

StochasticVector StochasticVector::uniform(std::size_t n) {
    if (n == 0) throw ValidationError("stochastic vector needs at least one entry");
    return StochasticVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

StochasticVector StochasticVector::unit(std::size_t n, std::size_t index) {
    if (index >= n) throw DimensionError("unit vector index out of range");
    std::vector<double> v(n, 0.0);
    v[index] = 1.0;
    return StochasticVector(std::move(v));
}

StochasticVector StochasticVector::from_weights(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("weights must be finite and nonnegative");
        sum += w;
    }
    if (!(sum > 0.0)) throw ValidationError("weights must have positive total");
    for (double& w : weights) w /= sum;
    return StochasticVector(std::move(weights));
}

// --- TransitionMatrix ---

TransitionMatrix::TransitionMatrix(std::size_t n, std::vector<std::size_t> col_ptr, std::vector<NodeIndex> row_idx,
                                   std::vector<double> values, std::vector<NodeIndex> dangling_columns)
    : n_(n),
      col_ptr_(std::move(col_ptr)),
      row_idx_(std::move(row_idx)),
      values_(std::move(values)),
      dangling_(std::move(dangling_columns)) {
    if (n_ == 0) throw ValidationError("transition matrix needs at least one node");
    if (col_ptr_.size() != n_ + 1 || col_ptr_.front() != 0 || col_ptr_.back() != values_.size() ||
        row_idx_.size() != values_.size()) {
        throw DimensionError("inconsistent compressed-column storage");
    }
    for (std::size_t j = 0; j < n_; ++j) {
        if (col_ptr_[j] > col_ptr_[j + 1]) throw DimensionError("column pointers must be nondecreasing");
        for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
            if (row_idx_[k] >= n_) throw DimensionError("row index out of range");
            if (!(values_[k] >= 0.0)) throw ValidationError("transition entries must be nonnegative");
        }
    }
}

double TransitionMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw DimensionError("matrix index out of range");
    for (std::size_t k = col_ptr_[col]; k < col_ptr_[col + 1]; ++k) {
        if (row_idx_[k] == row) return values_[k];
    }
    return 0.0;
}

double TransitionMatrix::column_sum(std::size_t col) const {
    if (col >= n_) throw DimensionError("column index out of range");
    double sum = 0.0;
    for (std::size_t k = col_ptr_[col]; k < col_ptr_[col + 1]; ++k) sum += values_[k];
    return sum;
}

// --- parsing ---

GraphEdges parse_edge_list(std::istream& in) {
    GraphEdges graph;
    std::uint64_t max_index_plus_one = 0;
    std::uint64_t header_nodes = 0;
    bool any_positive = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split_tokens(line);
        if (tokens.front() == "%nodes") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected '%nodes N'");
            const std::uint64_t count = parse_index(tokens[1], line_no);
            header_nodes = std::max(header_nodes, count);
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError(line_no, "expected 'src dst [weight]'");
        }
        Edge e;
        e.src = static_cast<NodeIndex>(parse_index(tokens[0], line_no));
        e.dst = static_cast<NodeIndex>(parse_index(tokens[1], line_no));
        if (tokens.size() == 3) e.weight = parse_weight(tokens[2], line_no);
        any_positive = any_positive || e.weight > 0.0;
        max_index_plus_one = std::max<std::uint64_t>(max_index_plus_one, std::max(e.src, e.dst) + std::uint64_t{1});
        graph.edges.push_back(e);
    }
    if (!graph.edges.empty() && !any_positive) {
        throw ValidationError("edge list has no edge with positive weight");
    }
    graph.node_count = static_cast<std::size_t>(std::max(max_index_plus_one, header_nodes));
    return graph;
}

GraphEdges parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

StochasticVector parse_teleport(std::istream& in) {
    std::vector<double> weights;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (split_tokens(line).size() != 1) throw ParseError(line_no, "expected one weight per line");
        weights.push_back(parse_weight(line, line_no));
    }
    return StochasticVector::from_weights(std::move(weights));
}

// --- construction ---

TransitionMatrix build_transition(const GraphEdges& graph, const StochasticVector& teleport) {
    const std::size_t n = graph.node_count;
    if (n == 0) throw ValidationError("graph has no nodes");
    if (teleport.size() != n) {
        throw DimensionError("teleport vector has " + std::to_string(teleport.size()) + " entries, graph has " +
                             std::to_string(n) + " nodes");
    }

    // Per source column: destination -> accumulated weight (parallel edges add up).
    std::vector<std::map<NodeIndex, double>> columns(n);
    std::vector<double> out_weight(n, 0.0);
    for (const Edge& e : graph.edges) {
        if (e.src >= n || e.dst >= n) throw ValidationError("edge endpoint outside node range");
        if (!(e.weight >= 0.0)) throw ValidationError("negative edge weight");
        if (e.weight == 0.0) continue;
        columns[e.src][e.dst] += e.weight;
        out_weight[e.src] += e.weight;
    }

    std::vector<std::size_t> col_ptr(n + 1, 0);
    std::vector<NodeIndex> rows;
    std::vector<double> values;
    std::vector<NodeIndex> dangling;
    for (std::size_t j = 0; j < n; ++j) {
        if (out_weight[j] > 0.0) {
            for (const auto& [row, w] : columns[j]) {
                rows.push_back(row);
                values.push_back(w / out_weight[j]);
            }
        } else {
            dangling.push_back(static_cast<NodeIndex>(j));
            for (std::size_t i = 0; i < n; ++i) {
                if (teleport[i] > 0.0) {
                    rows.push_back(static_cast<NodeIndex>(i));
                    values.push_back(teleport[i]);
                }
            }
        }
        col_ptr[j + 1] = values.size();
    }
    return TransitionMatrix(n, std::move(col_ptr), std::move(rows), std::move(values), std::move(dangling));
}

// --- kernels ---

void matvec(const TransitionMatrix& h, std::span<const double> v, std::span<double> out) {
    const std::size_t n = h.size();
    if (v.size() != n || out.size() != n) throw DimensionError("matvec dimension mismatch");
    const auto col_ptr = h.col_ptr();
    const auto rows = h.row_indices();
    const auto vals = h.values();
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double vj = v[j];
        if (vj == 0.0) continue;
        for (std::size_t k = col_ptr[j]; k < col_ptr[j + 1]; ++k) out[rows[k]] += vals[k] * vj;
    }
}

std::vector<double> matvec(const TransitionMatrix& h, std::span<const double> v) {
    std::vector<double> out(h.size());
    matvec(h, v, out);
    return out;
}

double l1_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("l1_distance dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

}  // namespace totalrank

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace totalrank {

/// Node indices ordered by descending score, ascending index on ties.
std::vector<std::size_t> ranking_order(std::span<const double> scores);

/// Kendall tau-b between the rankings induced by `a` and `b`, counted over
/// all pairs. Throws DimensionError on length mismatch or n < 2, and
/// DomainError when either vector is constant (tau-b is undefined).
double kendall_tau(std::span<const double> a, std::span<const double> b);

/// Size of the intersection of the two top-k sets under ranking_order.
std::size_t top_k_overlap(std::span<const double> a, std::span<const double> b, std::size_t k);

struct RankComparison {
    /// Empty when tau-b is undefined (a constant score vector).
    std::optional<double> kendall_tau;
    double l1_distance = 0.0;
    std::size_t top_k = 0;
    std::size_t top_k_overlap = 0;
    std::pair<std::string, std::string> methods;
};

RankComparison compare_rankings(std::span<const double> a, std::span<const double> b, std::size_t top_k,
                                std::pair<std::string, std::string> methods);

}  // namespace totalrank

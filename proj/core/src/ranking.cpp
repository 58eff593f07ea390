#include "totalrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "totalrank/errors.hpp"
#include "totalrank/graph_io.hpp"

namespace totalrank {

std::vector<std::size_t> ranking_order(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return scores[i] > scores[j]; });
    return order;
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("kendall_tau: length mismatch");
    const std::size_t n = a.size();
    if (n < 2) throw DimensionError("kendall_tau needs at least two entries");

    // Naive O(n^2) count; exact for the tie-corrected definition.
    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0.0) ++ties_a;
            if (db == 0.0) ++ties_b;
            if (da == 0.0 || db == 0.0) continue;
            if ((da > 0.0) == (db > 0.0))
                ++concordant;
            else
                ++discordant;
        }
    }
    const auto pairs = static_cast<long long>(n * (n - 1) / 2);
    const double denom = std::sqrt(static_cast<double>(pairs - ties_a) * static_cast<double>(pairs - ties_b));
    if (denom == 0.0) throw DomainError("kendall_tau is undefined for a constant ranking");
    const double tau = static_cast<double>(concordant - discordant) / denom;
    return std::clamp(tau, -1.0, 1.0);
}

std::size_t top_k_overlap(std::span<const double> a, std::span<const double> b, std::size_t k) {
    if (a.size() != b.size()) throw DimensionError("top_k_overlap: length mismatch");
    k = std::min(k, a.size());
    const auto oa = ranking_order(a);
    const auto ob = ranking_order(b);
    const std::unordered_set<std::size_t> top_a(oa.begin(), oa.begin() + static_cast<std::ptrdiff_t>(k));
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < k; ++i) overlap += top_a.count(ob[i]);
    return overlap;
}

RankComparison compare_rankings(std::span<const double> a, std::span<const double> b, std::size_t top_k,
                                std::pair<std::string, std::string> methods) {
    RankComparison c;
    if (a.size() >= 2) {
        try {
            c.kendall_tau = kendall_tau(a, b);
        } catch (const DomainError&) {
            c.kendall_tau.reset();
        }
    }
    c.l1_distance = l1_distance(a, b);
    c.top_k = std::min(top_k, a.size());
    c.top_k_overlap = top_k_overlap(a, b, top_k);
    c.methods = std::move(methods);
    return c;
}

}  // namespace totalrank

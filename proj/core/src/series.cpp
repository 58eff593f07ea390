#include "totalrank/series.hpp"

#include <cmath>

#include "totalrank/errors.hpp"

namespace totalrank {

void SeriesConfig::validate() const {
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("series tolerance must lie in (0, 1)");
    if (max_terms < 1) throw DomainError("series max_terms must be at least 1");
}

double coefficient(std::size_t t) {
    const double a = static_cast<double>(t) + 1.0;
    return 1.0 / (a * (a + 1.0));
}

double partial_mass(std::size_t terms) {
    if (terms < 1) throw DomainError("partial_mass needs at least one term");
    return 1.0 - 1.0 / (static_cast<double>(terms) + 1.0);
}

std::size_t terms_for_tolerance(double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("series tolerance must lie in (0, 1)");
    const double guess = std::ceil(1.0 / tol) - 1.0;
    if (guess >= 1e18) throw DomainError("series tolerance too small");
    auto terms = static_cast<std::size_t>(std::max(guess, 1.0));
    // 1/tol is rounded; nudge so T is the smallest integer meeting the bound.
    while (1.0 / (static_cast<double>(terms) + 1.0) > tol) ++terms;
    while (terms > 1 && 1.0 / static_cast<double>(terms) <= tol) --terms;
    return terms;
}

std::vector<double> series_partial_sum(const TransitionMatrix& h, const StochasticVector& o0, std::size_t terms) {
    const std::size_t n = h.size();
    if (o0.size() != n) throw DimensionError("teleport vector does not match matrix dimension");

    std::vector<double> power(o0.values().begin(), o0.values().end());  // H^t o0
    std::vector<double> sum(n, 0.0);
    std::vector<double> scratch(n);
    for (std::size_t t = 0; t < terms; ++t) {
        const double c = coefficient(t);
        for (std::size_t i = 0; i < n; ++i) sum[i] += c * power[i];
        if (t + 1 < terms) {
            matvec(h, power, scratch);
            power.swap(scratch);
        }
    }
    return sum;
}

RankResult series_sum(const TransitionMatrix& h, const StochasticVector& o0, const SeriesConfig& cfg) {
    cfg.validate();
    std::size_t terms = terms_for_tolerance(cfg.tol);

    RankResult result;
    result.method = RankMethod::Series;
    if (terms > cfg.max_terms) {
        terms = cfg.max_terms;
        result.converged = false;
    }
    result.vector = series_partial_sum(h, o0, terms);
    result.iterations_or_terms = terms;
    result.error_bound = 1.0 / (static_cast<double>(terms) + 1.0);

    if (cfg.renormalize) {
        const double mass = l1_norm(result.vector);
        for (double& x : result.vector) x /= mass;
        result.renormalized = true;
    }
    return result;
}

}  // namespace totalrank

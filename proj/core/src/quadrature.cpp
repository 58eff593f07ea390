#include "totalrank/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "totalrank/errors.hpp"

namespace totalrank {

namespace {

constexpr double kNewtonTolerance = 1e-15;

// Legendre P_k(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre(std::size_t k, double x) {
    double p0 = 1.0;
    double p1 = x;
    if (k == 0) return {1.0, 0.0};
    for (std::size_t j = 2; j <= k; ++j) {
        const double pj = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
        p0 = p1;
        p1 = pj;
    }
    const double dp = static_cast<double>(k) * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

std::vector<double> integrate(const TransitionMatrix& h, const StochasticVector& o0, const AlphaRule& rule,
                              InnerMethod method, double inner_tol, const DenseMatrix* dense) {
    std::vector<double> acc(h.size(), 0.0);
    for (std::size_t q = 0; q < rule.alphas.size(); ++q) {
        const double a = rule.alphas[q];
        RankResult sample;
        try {
            const DampingFactor alpha(a);
            if (method == InnerMethod::DenseSolve) {
                sample = dense_solve(*dense, o0, alpha);
            } else {
                sample = power_iteration(h, o0, alpha, inner_tol);
                if (!sample.converged) {
                    throw ConvergenceError("power iteration did not reach tolerance");
                }
            }
        } catch (const DomainError& e) {
            throw DomainError("inner PageRank solve failed at alpha = " + std::to_string(a) + ": " + e.what());
        }
        const double w = rule.weights[q];
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * sample.vector[i];
    }
    return acc;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (nodes_per_panel < 1 || nodes_per_panel > 64) throw DomainError("nodes_per_panel must lie in [1, 64]");
    if (panels < 1) throw DomainError("panels must be positive");
    if (!(grading > 1.0)) throw DomainError("grading must exceed 1");
    if (!(inner_tol > 0.0)) throw DomainError("inner_tol must be positive");
}

GaussLegendreRule gauss_legendre(std::size_t k) {
    if (k < 1 || k > 64) throw DomainError("Gauss-Legendre order must lie in [1, 64]");
    GaussLegendreRule rule;
    rule.nodes.resize(k);
    rule.weights.resize(k);
    if (k == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    const double kd = static_cast<double>(k);
    for (std::size_t i = 0; i < (k + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (kd + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const auto [p, d] = legendre(k, x);
            dp = d;
            const double dx = p / d;
            x -= dx;
            if (std::abs(dx) <= kNewtonTolerance) break;
        }
        dp = legendre(k, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // roots come out descending; mirror into ascending order
        rule.nodes[i] = -x;
        rule.nodes[k - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[k - 1 - i] = w;
    }
    if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
    return rule;
}

std::vector<double> graded_breakpoints(std::size_t panels, double grading) {
    if (panels < 1) throw DomainError("panels must be positive");
    if (!(grading > 1.0)) throw DomainError("grading must exceed 1");
    const double last = 1.0 - std::pow(grading, -static_cast<double>(panels));
    std::vector<double> b(panels + 1);
    for (std::size_t j = 0; j <= panels; ++j) {
        b[j] = (1.0 - std::pow(grading, -static_cast<double>(j))) / last;
    }
    b.front() = 0.0;
    b.back() = 1.0;
    return b;
}

namespace {

void append_panel(AlphaRule& rule, const GaussLegendreRule& gl, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double a = mid + half * gl.nodes[i];
        if (!(a > DampingFactor::kEndpointMargin && a < 1.0 - DampingFactor::kEndpointMargin)) {
            throw DomainError("quadrature node " + std::to_string(a) +
                              " is too close to an endpoint; reduce panels or grading");
        }
        rule.alphas.push_back(a);
        rule.weights.push_back(half * gl.weights[i]);
    }
}

// Same rule with every panel split in half.
AlphaRule bisected_alpha_rule(const QuadratureConfig& cfg) {
    const auto gl = gauss_legendre(cfg.nodes_per_panel);
    const auto b = graded_breakpoints(cfg.panels, cfg.grading);
    AlphaRule rule;
    for (std::size_t p = 0; p + 1 < b.size(); ++p) {
        const double cut = 0.5 * (b[p] + b[p + 1]);
        append_panel(rule, gl, b[p], cut);
        append_panel(rule, gl, cut, b[p + 1]);
    }
    return rule;
}

}  // namespace

AlphaRule composite_alpha_rule(const QuadratureConfig& cfg) {
    cfg.validate();
    const auto gl = gauss_legendre(cfg.nodes_per_panel);
    const auto b = graded_breakpoints(cfg.panels, cfg.grading);
    AlphaRule rule;
    for (std::size_t p = 0; p + 1 < b.size(); ++p) append_panel(rule, gl, b[p], b[p + 1]);
    return rule;
}

RankResult marginalize_pagerank(const TransitionMatrix& h, const StochasticVector& o0, const QuadratureConfig& cfg) {
    if (o0.size() != h.size()) throw DimensionError("teleport vector does not match matrix dimension");
    const AlphaRule rule = composite_alpha_rule(cfg);
    const AlphaRule refined = bisected_alpha_rule(cfg);

    const InnerMethod method = cfg.inner_method.value_or(
        h.size() <= QuadratureConfig::kDenseAutoLimit ? InnerMethod::DenseSolve : InnerMethod::PowerIteration);
    std::optional<DenseMatrix> dense;
    if (method == InnerMethod::DenseSolve) dense = to_dense(h);
    const DenseMatrix* dense_ptr = dense ? &*dense : nullptr;

    RankResult result;
    result.method = RankMethod::Quadrature;
    result.vector = integrate(h, o0, rule, method, cfg.inner_tol, dense_ptr);
    const auto fine = integrate(h, o0, refined, method, cfg.inner_tol, dense_ptr);
    result.iterations_or_terms = rule.alphas.size();
    // twice the observed change plus a rounding floor
    result.error_bound = 2.0 * l1_distance(result.vector, fine) + 1e-14;
    result.certified = false;
    return result;
}

}  // namespace totalrank

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "totalrank/errors.hpp"
#include "totalrank/random_models.hpp"
#include "totalrank/series.hpp"

namespace totalrank {
namespace {

using testing::build;
using testing::two_cycle;

TEST(Coefficient, FirstTerms) {
    EXPECT_DOUBLE_EQ(coefficient(0), 0.5);
    EXPECT_DOUBLE_EQ(coefficient(1), 1.0 / 6.0);
}

TEST(Coefficient, LargeIndexStaysPositiveAndAccurate) {
    const double c = coefficient(1'000'000);
    EXPECT_GT(c, 0.0);
    // 1 / (1000001 * 1000002), mpmath
    EXPECT_NEAR(c, 9.99997000006999985e-13, 1e-27);
}

TEST(Coefficient, PositiveAndStrictlyDecreasing) {
    for (std::size_t t = 0; t < 100'000; ++t) {
        ASSERT_GT(coefficient(t), coefficient(t + 1));
        ASSERT_GT(coefficient(t + 1), 0.0);
    }
}

TEST(PartialMass, Examples) {
    EXPECT_DOUBLE_EQ(partial_mass(1), 0.5);
    EXPECT_DOUBLE_EQ(partial_mass(2), 2.0 / 3.0);
    EXPECT_NEAR(partial_mass(9999), 0.9999, 1e-15);
    EXPECT_THROW(partial_mass(0), DomainError);
}

TEST(PartialMass, MatchesCoefficientSums) {
    double sum = 0.0;
    std::size_t next_check = 1;
    for (std::size_t t = 0; t < 1'000'000; ++t) {
        sum += coefficient(t);
        if (t + 1 == next_check) {
            EXPECT_NEAR(sum, partial_mass(t + 1), 1e-12) << "T=" << t + 1;
            next_check *= 10;
        }
    }
    EXPECT_NEAR(sum, partial_mass(1'000'000), 1e-12);
}

TEST(TermsForTolerance, SmallestSufficientCount) {
    EXPECT_EQ(terms_for_tolerance(0.5), 1u);
    EXPECT_EQ(terms_for_tolerance(0.3), 3u);
    EXPECT_EQ(terms_for_tolerance(1e-4), 9999u);
    EXPECT_EQ(terms_for_tolerance(1e-5), 99999u);
    for (double tol : {0.9, 0.123, 1e-3, 7e-4, 1.0 / 101.0}) {
        const std::size_t t = terms_for_tolerance(tol);
        EXPECT_LE(1.0 / (t + 1.0), tol);
        if (t > 1) EXPECT_GT(1.0 / static_cast<double>(t), tol);
    }
    EXPECT_THROW(terms_for_tolerance(0.0), DomainError);
    EXPECT_THROW(terms_for_tolerance(1.0), DomainError);
}

TEST(SeriesSum, UniformTwoCycle) {
    SeriesConfig raw;
    raw.tol = 1e-3;
    raw.renormalize = false;
    const auto r = series_sum(build(two_cycle()), StochasticVector::uniform(2), raw);
    const double mass = 1.0 - 1.0 / (r.iterations_or_terms + 1.0);
    EXPECT_NEAR(r.vector[0], 0.5 * mass, 1e-15);
    EXPECT_NEAR(r.vector[1], 0.5 * mass, 1e-15);

    const auto norm = series_sum(build(two_cycle()), StochasticVector::uniform(2), {.tol = 1e-3});
    EXPECT_TRUE(norm.renormalized);
    EXPECT_NEAR(norm.vector[0], 0.5, 1e-15);
    EXPECT_NEAR(norm.vector[1], 0.5, 1e-15);
}

TEST(SeriesSum, PeriodicTwoCycleConvergesToLog2) {
    // The 2-cycle has no limit H^t, but even coefficients telescope to ln 2.
    const auto r = series_sum(build(two_cycle()), StochasticVector::unit(2, 0), {.tol = 1e-4});
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations_or_terms, 9999u);
    EXPECT_NEAR(r.error_bound, 1e-4, 1e-18);
    EXPECT_NEAR(r.vector[0], testing::kLn2, 1e-4);
    EXPECT_NEAR(r.vector[1], 1.0 - testing::kLn2, 1e-4);

    // brute-force partial sums of the even and odd coefficients
    double even = 0.0, odd = 0.0;
    for (std::size_t t = 0; t < 9999; ++t) (t % 2 == 0 ? even : odd) += coefficient(t);
    EXPECT_NEAR(r.vector[0], even / (even + odd), 1e-14);
}

TEST(SeriesSum, SelfLoop) {
    const auto r = series_sum(build(testing::self_loop()), StochasticVector::uniform(1), {.tol = 1e-3, .renormalize = false});
    EXPECT_NEAR(r.vector[0], partial_mass(r.iterations_or_terms), 1e-15);
    EXPECT_DOUBLE_EQ(r.error_bound, 1.0 / (r.iterations_or_terms + 1.0));
    const auto n = series_sum(build(testing::self_loop()), StochasticVector::uniform(1));
    EXPECT_DOUBLE_EQ(n.vector[0], 1.0);
}

TEST(SeriesSum, TruncationFlagWhenCapped) {
    const auto r = series_sum(build(two_cycle()), StochasticVector::uniform(2), {.tol = 1e-6, .max_terms = 50});
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations_or_terms, 50u);
    EXPECT_DOUBLE_EQ(r.error_bound, 1.0 / 51.0);
}

TEST(SeriesSum, ConfigValidation) {
    const auto h = build(two_cycle());
    EXPECT_THROW(series_sum(h, StochasticVector::uniform(2), {.tol = 0.0}), DomainError);
    EXPECT_THROW(series_sum(h, StochasticVector::uniform(2), {.tol = 1.5}), DomainError);
    EXPECT_THROW(series_sum(h, StochasticVector::uniform(2), {.tol = 0.1, .max_terms = 0}), DomainError);
    EXPECT_THROW(series_sum(h, StochasticVector::uniform(3)), DimensionError);
}

TEST(SeriesProperties, MassIdentity) {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.index(30);
        const auto h = build(random_graph(n, rng.uniform(0.0, 0.3), rng));
        const auto o0 = StochasticVector::unit(n, rng.index(n));
        for (std::size_t terms : {1, 10, 100, 1000}) {
            EXPECT_NEAR(l1_norm(series_partial_sum(h, o0, terms)), partial_mass(terms), 1e-10);
        }
    }
}

TEST(SeriesProperties, TailIsExactlyTheMissingMass) {
    Rng rng(32);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 2 + rng.index(20);
        const auto h = build(random_graph(n, 0.2, rng));
        const auto o0 = StochasticVector::uniform(n);
        const std::size_t terms = 50, deep = 100 * terms;
        const auto shallow = series_partial_sum(h, o0, terms);
        const auto reference = series_partial_sum(h, o0, deep);
        EXPECT_NEAR(l1_distance(reference, shallow), 1.0 / (terms + 1.0) - 1.0 / (deep + 1.0), 1e-10);
    }
}

TEST(SeriesProperties, MatchesCompensatedOracle) {
    Rng rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 2 + rng.index(15);
        const auto g = random_graph(n, 0.3, rng);
        const auto o0 = StochasticVector::uniform(n);
        const auto ref_h = oracle::transition_from_edges(g, testing::to_vec(o0));
        const auto got = series_partial_sum(build_transition(g, o0), o0, 5000);
        const auto ref = oracle::compensated_series(ref_h, testing::to_vec(o0), 5000);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-12);
    }
}

TEST(SeriesProperties, RenormalizedOutputIsStochastic) {
    Rng rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng.index(30);
        const auto r = series_sum(build(random_graph(n, 0.15, rng)), StochasticVector::uniform(n), {.tol = 1e-3});
        EXPECT_NO_THROW(StochasticVector{r.vector});
        EXPECT_NEAR(l1_norm(r.vector), 1.0, 1e-10);
    }
}

}  // namespace
}  // namespace totalrank

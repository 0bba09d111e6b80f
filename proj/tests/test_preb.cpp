#include "doctest.h"

#include <cmath>
#include <vector>

#include "acs/preb.hpp"
#include "acs/rng.hpp"

using acs::Interval;
using acs::PredictableStats;
using acs::PrEbEngine;
using acs::psi_e;
using acs::Rng;

TEST_CASE("psi_e reference values") {
    CHECK(psi_e(0.0) == 0.0);
    // (-log(1/2) - 1/2)/4 at high precision.
    CHECK(psi_e(0.5) == doctest::Approx(0.048286795139986327).epsilon(1e-14));
    // Quadratic behavior near zero: psi_e(l) ~ l^2/8.
    const double l = 1e-4;
    CHECK(psi_e(l) / (l * l) == doctest::Approx(0.125).epsilon(1e-4));
    // Monotone increasing on the domain.
    CHECK(psi_e(0.3) < psi_e(0.4));
}

TEST_CASE("psi_e domain") {
    CHECK_THROWS_AS(psi_e(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(psi_e(1.0), std::invalid_argument);
    CHECK_THROWS_AS(psi_e(1.5), std::invalid_argument);
}

TEST_CASE("first-step closed form") {
    // x=1: lambda = min(6.5249..., 1/2) = 1/2, v = 4*(1 - 1/2)^2 = 1,
    // center = 1, radius = (log 40 + psi_e(1/2)) / (1/2).
    PrEbEngine e(0.05);
    CHECK(e.center() == 0.5);
    CHECK(e.radius() == 0.5);

    e.update(1.0);
    CHECK(e.center() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.radius() == doctest::Approx(7.4743324985078453).epsilon(1e-14));
    CHECK(e.current_set() == Interval::unit());
}

TEST_CASE("lambda is capped at one half") {
    PrEbEngine e(0.05);
    e.update(1.0);
    CHECK(e.sum_lambda() == 0.5);
    CHECK(e.sum_lambda_x() == 0.5);
    CHECK(e.sum_v_psi() == doctest::Approx(psi_e(0.5)).epsilon(1e-15));
}

TEST_CASE("accumulators equal a from-scratch recomputation") {
    // Replay the predictable sequence independently and compare each
    // accumulator to 1 ulp.
    const int n = 100;
    Rng rng(31);
    std::vector<double> xs(n);
    for (auto& x : xs) x = rng.beta(10.0, 30.0);

    PrEbEngine e(0.05);
    for (double x : xs) e.update(x);

    PredictableStats stats;
    double sum_lambda = 0.0, sum_lambda_x = 0.0, sum_v_psi = 0.0;
    for (double x : xs) {
        const double lam = std::min(acs::predictable_fraction(stats, 0.05), 0.5);
        const double v = 4.0 * (x - stats.mu_hat()) * (x - stats.mu_hat());
        sum_lambda += lam;
        sum_lambda_x += lam * x;
        sum_v_psi += v * psi_e(lam);
        stats.update(x);
    }
    CHECK(e.sum_lambda() == doctest::Approx(sum_lambda).epsilon(1e-15));
    CHECK(e.sum_lambda_x() == doctest::Approx(sum_lambda_x).epsilon(1e-15));
    CHECK(e.sum_v_psi() == doctest::Approx(sum_v_psi).epsilon(1e-15));
}

TEST_CASE("per-step set is clipped and intersected") {
    PrEbEngine e(0.05);
    Rng rng(77);
    double prev = 1.0;
    for (int i = 0; i < 400; ++i) {
        const Interval iv = e.step(rng.beta(10.0, 30.0));
        REQUIRE(!iv.is_empty());
        CHECK(iv.lo() >= 0.0);
        CHECK(iv.hi() <= 1.0);
        CHECK(iv.width() <= prev);
        prev = iv.width();
    }
    // By t=400 the set has left the trivial state and brackets the truth.
    CHECK(prev < 0.2);
    CHECK(e.current().contains(0.25));
}

TEST_CASE("coverage on Bernoulli(1/2) streams") {
    int miss = 0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
        PrEbEngine e(0.05);
        Rng rng(acs::derive_seed(505, {static_cast<std::uint64_t>(r)}));
        for (int i = 0; i < 400; ++i) e.step(rng.bernoulli(0.5) ? 1.0 : 0.0);
        if (!e.current().contains(0.5)) ++miss;
    }
    CHECK(miss <= static_cast<int>(0.07 * reps));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(PrEbEngine(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PrEbEngine(1.0), std::invalid_argument);
    PrEbEngine e(0.05);
    CHECK_THROWS_AS(e.update(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(e.update(1.1), std::invalid_argument);
}

TEST_CASE("current_set is idempotent between updates") {
    PrEbEngine e(0.05);
    Rng rng(41);
    for (int i = 0; i < 50; ++i) e.update(rng.next_double());
    CHECK(e.current_set() == e.current_set());
}

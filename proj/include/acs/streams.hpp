// Seeded synthetic data streams for the simulation studies.

#pragma once

#include <cstdint>
#include <vector>

#include "acs/interval.hpp"

namespace acs {

// Ground truth behind a generated stream.
struct SimulationTruth {
    double mu_true = 0.0;

    static SimulationTruth beta(double a, double b) { return {a / (a + b)}; }
    static SimulationTruth bernoulli(double p) { return {p}; }
};

// n i.i.d. Beta(a,b) draws via the Marsaglia-Tsang gamma sampler
// (X = G_a / (G_a + G_b)). Deterministic given the seed.
std::vector<StreamRecord> gen_beta_stream(double a, double b, std::int64_t n, std::uint64_t seed);

// n i.i.d. Bernoulli(p) draws as 0/1 reals. Deterministic given the seed.
std::vector<StreamRecord> gen_bernoulli_stream(double p, std::int64_t n, std::uint64_t seed);

}  // namespace acs

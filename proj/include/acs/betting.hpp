// Hedged capital betting confidence-sequence engine.
//
// For each candidate mean m on a uniform grid, two wealth processes bet that
// the true mean is above (K+) or below (K-) m:
//   K_t^+-(m) = prod_{i<=t} (1 +- lambda_i^+-(m) * (X_i - m))
// with the predictable fraction truncated so no single step can lose more
// than a fraction c of the wealth. A candidate is rejected once the hedged
// wealth max(theta*K+, (1-theta)*K-) reaches 1/alpha; the reported interval
// is the running intersection of the convex hulls of surviving candidates.

#pragma once

#include <cstdint>
#include <vector>

#include "acs/interval.hpp"
#include "acs/predictable.hpp"

namespace acs {

struct BettingConfig {
    int grid_size = 1000;  // candidates m_j = j/grid_size, j = 0..grid_size
    double theta = 0.5;    // hedge weight between the two directions
    double trunc = 0.5;    // truncation level c in (0,1)
    double alpha = 0.05;

    void validate() const {
        if (grid_size < 2) throw std::invalid_argument("BettingConfig: grid_size must be >= 2");
        if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("BettingConfig: theta must be in [0,1]");
        if (!(trunc > 0.0 && trunc < 1.0)) throw std::invalid_argument("BettingConfig: trunc must be in (0,1)");
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("BettingConfig: alpha must be in (0,1)");
    }
};

class BettingEngine {
public:
    explicit BettingEngine(BettingConfig cfg);

    // Folds one observation into every candidate's wealth. The betting
    // fraction is computed from the statistics of X_1..X_{t-1} only, then the
    // statistics absorb x.
    void update(double x);

    // Convex hull of candidates whose hedged wealth is below 1/alpha, pushed
    // through the running intersection. Idempotent between updates.
    Interval current_set();

    // log of max(theta * K+, (1-theta) * K-) at grid index j.
    double log_wealth(int j) const;

    Interval step(double x) {
        update(x);
        return current_set();
    }

    int grid_points() const { return static_cast<int>(log_cap_plus_.size()); }
    double grid_value(int j) const { return static_cast<double>(j) / cfg_.grid_size; }
    std::int64_t count() const { return stats_.count(); }
    const PredictableStats& stats() const { return stats_; }
    bool ever_empty() const { return ri_.ever_empty(); }
    const Interval& current() const { return ri_.current(); }

private:
    BettingConfig cfg_;
    std::vector<double> grid_;            // m_j
    std::vector<double> cap_over_m_;      // c / m_j  (unused at j = 0)
    std::vector<double> cap_over_1m_;     // c / (1 - m_j)  (unused at j = G)
    std::vector<double> log_cap_plus_;
    std::vector<double> log_cap_minus_;
    PredictableStats stats_;
    RunningIntersection ri_;
};

}  // namespace acs

#include "acs/betting.hpp"

#include <algorithm>
#include <cmath>

namespace acs {

BettingEngine::BettingEngine(BettingConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    const int n = cfg_.grid_size + 1;
    grid_.resize(n);
    cap_over_m_.resize(n, 0.0);
    cap_over_1m_.resize(n, 0.0);
    log_cap_plus_.assign(n, 0.0);
    log_cap_minus_.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        grid_[j] = static_cast<double>(j) / cfg_.grid_size;
        if (j > 0) cap_over_m_[j] = cfg_.trunc / grid_[j];
        if (j < n - 1) cap_over_1m_[j] = cfg_.trunc / (1.0 - grid_[j]);
    }
}

void BettingEngine::update(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("BettingEngine: x must be in [0,1]");
    const double lambda = predictable_fraction(stats_, cfg_.alpha);
    const int n = static_cast<int>(grid_.size());
    for (int j = 0; j < n; ++j) {
        const double diff = x - grid_[j];
        // lambda+ is uncapped at m = 0 and lambda- at m = 1: the bet cannot
        // lose there, so no truncation is needed.
        const double lp = (j == 0) ? lambda : std::min(lambda, cap_over_m_[j]);
        const double lm = (j == n - 1) ? lambda : std::min(lambda, cap_over_1m_[j]);
        log_cap_plus_[j] += std::log1p(lp * diff);
        log_cap_minus_[j] += std::log1p(-lm * diff);
    }
    stats_.update(x);
}

double BettingEngine::log_wealth(int j) const {
    return std::max(std::log(cfg_.theta) + log_cap_plus_[j],
                    std::log(1.0 - cfg_.theta) + log_cap_minus_[j]);
}

Interval BettingEngine::current_set() {
    const double log_threshold = -std::log(cfg_.alpha);
    const int n = static_cast<int>(grid_.size());
    int first = -1;
    int last = -1;
    for (int j = 0; j < n; ++j) {
        if (log_wealth(j) < log_threshold) {
            if (first < 0) first = j;
            last = j;
        }
    }
    if (first < 0) {
        ri_.push(Interval::empty());
    } else {
        ri_.push(clip_unit(Interval(grid_[first], grid_[last])));
    }
    return ri_.current();
}

}  // namespace acs

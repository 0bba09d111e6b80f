// Predictable plug-in empirical Bernstein confidence-sequence engine.
//
// Closed form per step:
//   center = sum(lambda_i X_i) / sum(lambda_i)
//   radius = ( log(2/alpha) + sum(v_i psi_e(lambda_i)) ) / sum(lambda_i)
// with lambda_t = min(lambda_tilde_t, 1/2), v_t = 4 (X_t - mu_hat_{t-1})^2,
// and psi_e the exponential-Bernstein rate function. The reported interval
// is the running intersection of the clipped per-step sets.

#pragma once

#include "acs/interval.hpp"
#include "acs/predictable.hpp"

namespace acs {

// psi_e(lambda) = (-log(1-lambda) - lambda) / 4 on [0,1).
// Nonnegative, increasing, convex; ~ lambda^2/8 near zero.
inline double psi_e(double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0)) throw std::invalid_argument("psi_e: lambda must be in [0,1)");
    return (-std::log1p(-lambda) - lambda) / 4.0;
}

class PrEbEngine {
public:
    // Truncation keeping lambda inside the domain of psi_e.
    static constexpr double kLambdaCap = 0.5;

    explicit PrEbEngine(double alpha = 0.05) : alpha_(alpha) {
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("PrEbEngine: alpha must be in (0,1)");
    }

    // Accumulates one observation. lambda_t and v_t use the statistics of
    // X_1..X_{t-1} only, then the statistics absorb x.
    void update(double x) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("PrEbEngine: x must be in [0,1]");
        const double lambda = std::min(predictable_fraction(stats_, alpha_), kLambdaCap);
        const double v = 4.0 * (x - stats_.mu_hat()) * (x - stats_.mu_hat());
        sum_lambda_ += lambda;
        sum_lambda_x_ += lambda * x;
        sum_v_psi_ += v * psi_e(lambda);
        stats_.update(x);
    }

    // Per-step set is [center - radius, center + radius]; [0,1] before the
    // first observation.
    double center() const { return stats_.count() == 0 ? 0.5 : sum_lambda_x_ / sum_lambda_; }
    double radius() const {
        if (stats_.count() == 0) return 0.5;
        return (std::log(2.0 / alpha_) + sum_v_psi_) / sum_lambda_;
    }

    // Clipped per-step set pushed through the running intersection.
    // Idempotent between updates.
    Interval current_set() {
        if (stats_.count() == 0) return ri_.current();
        const double c = center();
        const double r = radius();
        ri_.push(clip_unit(Interval(c - r, c + r)));
        return ri_.current();
    }

    Interval step(double x) {
        update(x);
        return current_set();
    }

    std::int64_t count() const { return stats_.count(); }
    double sum_lambda() const { return sum_lambda_; }
    double sum_lambda_x() const { return sum_lambda_x_; }
    double sum_v_psi() const { return sum_v_psi_; }
    const PredictableStats& stats() const { return stats_; }
    bool ever_empty() const { return ri_.ever_empty(); }
    const Interval& current() const { return ri_.current(); }

private:
    double alpha_;
    PredictableStats stats_;
    double sum_lambda_ = 0.0;
    double sum_lambda_x_ = 0.0;
    double sum_v_psi_ = 0.0;
    RunningIntersection ri_;
};

}  // namespace acs

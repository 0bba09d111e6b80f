// Regularized running mean/variance and the predictable tuning fraction
// shared by the betting and empirical-Bernstein engines.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace acs {

// Running statistics over X_1..X_t with shrinkage priors:
//   mu_hat_t  = (1/2 + sum_{i<=t} X_i) / (t + 1)
//   var_hat_t = (1/4 + sum_{i<=t} (X_i - mu_hat_i)^2) / (t + 1)
// mu_hat_0 = 1/2 and var_hat_0 = 1/4, so var_hat is bounded away from zero
// and the derived fraction is always finite.
class PredictableStats {
public:
    void update(double x) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("PredictableStats: x must be in [0,1]");
        ++t_;
        sum_x_ += x;
        mu_hat_ = (0.5 + sum_x_) / static_cast<double>(t_ + 1);
        sq_dev_sum_ += (x - mu_hat_) * (x - mu_hat_);
        var_hat_ = (0.25 + sq_dev_sum_) / static_cast<double>(t_ + 1);
    }

    std::int64_t count() const { return t_; }
    double sum_x() const { return sum_x_; }
    double mu_hat() const { return mu_hat_; }
    double var_hat() const { return var_hat_; }

private:
    std::int64_t t_ = 0;
    double sum_x_ = 0.0;
    double sq_dev_sum_ = 0.0;
    double mu_hat_ = 0.5;
    double var_hat_ = 0.25;
};

// Tuning fraction for the upcoming observation. With t-1 observations folded
// into stats, returns
//   lambda_tilde_t = sqrt( 2 log(2/alpha) / (var_hat_{t-1} * t * log(1+t)) ).
// Strictly positive and finite for every t >= 1.
inline double predictable_fraction(const PredictableStats& stats, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("predictable_fraction: alpha must be in (0,1)");
    const double t = static_cast<double>(stats.count() + 1);
    return std::sqrt(2.0 * std::log(2.0 / alpha) / (stats.var_hat() * t * std::log1p(t)));
}

}  // namespace acs

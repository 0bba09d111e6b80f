// Batched percentile-bootstrap confidence sequence.
//
// Time is laid out in dyadic batches l = 1..L (batch l covers
// 2^l <= t < 2^(l+1), clamped at both ends). Each batch is granted alpha/L of
// the error budget and owns one interval: when the stream enters batch l, the
// alpha/(2L)- and (1 - alpha/(2L))-quantiles of B bootstrap resample means
// over the full prefix X_1..X_t are computed, and that interval is reported
// unchanged until the next batch begins. Unlike the martingale engines the
// output is not intersected over time; the guarantee is a union bound over
// batches, not a supermartingale.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "acs/interval.hpp"

namespace acs {

struct BootstrapConfig {
    int replicates = 200;  // B
    int batches = 10;      // L
    double alpha = 0.05;
    std::uint64_t seed = 0;

    void validate() const {
        if (replicates < 2) throw std::invalid_argument("BootstrapConfig: replicates must be >= 2");
        if (batches < 1) throw std::invalid_argument("BootstrapConfig: batches must be >= 1");
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("BootstrapConfig: alpha must be in (0,1)");
    }
};

// Quantile levels shared by every batch: alpha/(2L) and 1 - alpha/(2L).
inline std::pair<double, double> quantile_levels(const BootstrapConfig& cfg) {
    const double tail = cfg.alpha / (2.0 * cfg.batches);
    return {tail, 1.0 - tail};
}

// clamp(floor(log2 t), 1, L); t = 1 maps to batch 1, t >= 2^(L+1) to batch L.
int batch_index(std::int64_t t, int batches);

// Linear-interpolation empirical quantile of a sorted sequence:
// h = q*(n-1), v[floor(h)] + (h - floor(h)) * (v[floor(h)+1] - v[floor(h)]).
double quantile_sorted(std::span<const double> sorted_values, double q);

// Percentile-bootstrap interval over `data`: B resamples of size |data| with
// replacement, quantiles of the resample means at the batch levels, clipped
// to [0,1]. Replicate b draws from the substream keyed by
// (cfg.seed, stream_id, t, b), so the result is a pure function of
// (data, cfg, stream_id, t) and replicates may be evaluated in any order.
Interval bootstrap_ci(std::span<const double> data, const BootstrapConfig& cfg,
                      std::uint64_t stream_id, std::int64_t t);

// The resample means behind bootstrap_ci, unsorted, indexed by replicate.
std::vector<double> bootstrap_means(std::span<const double> data, const BootstrapConfig& cfg,
                                    std::uint64_t stream_id, std::int64_t t);

// Streaming wrapper: buffers the prefix and reports each batch's interval.
// The interval is recomputed from the full prefix on the step that enters a
// new batch (t = 1, 4, 8, ..., 2^L) and frozen in between, so each batch gets
// exactly one resampling pass.
class BootstrapEngine {
public:
    explicit BootstrapEngine(BootstrapConfig cfg, std::uint64_t stream_id = 0)
        : cfg_(cfg), stream_id_(stream_id) {
        cfg_.validate();
    }

    Interval step(double x) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("BootstrapEngine: x must be in [0,1]");
        prefix_.push_back(x);
        const auto t = static_cast<std::int64_t>(prefix_.size());
        const int batch = batch_index(t, cfg_.batches);
        if (batch != last_batch_) {
            current_ = bootstrap_ci(prefix_, cfg_, stream_id_, t);
            last_batch_ = batch;
        }
        return current_;
    }

    // Interval recomputed from the full prefix at the current time, bypassing
    // the once-per-batch freeze. Monitoring reads step()/current(); a study
    // that stops at t and reports a single interval reads this instead, which
    // matches a batch query made exactly at the stopping time.
    Interval prefix_interval() const {
        if (prefix_.empty()) return Interval::unit();
        return bootstrap_ci(prefix_, cfg_, stream_id_,
                            static_cast<std::int64_t>(prefix_.size()));
    }

    std::int64_t count() const { return static_cast<std::int64_t>(prefix_.size()); }
    int current_batch() const { return batch_index(std::max<std::int64_t>(count(), 1), cfg_.batches); }
    const Interval& current() const { return current_; }
    const std::vector<double>& prefix() const { return prefix_; }

private:
    BootstrapConfig cfg_;
    std::uint64_t stream_id_;
    std::vector<double> prefix_;
    Interval current_ = Interval::unit();
    int last_batch_ = 0;
};

}  // namespace acs

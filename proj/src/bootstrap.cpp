#include "acs/bootstrap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "acs/rng.hpp"

namespace acs {

int batch_index(std::int64_t t, int batches) {
    if (t < 1) throw std::invalid_argument("batch_index: t must be >= 1");
    const int l = std::bit_width(static_cast<std::uint64_t>(t)) - 1;  // floor(log2 t)
    return std::clamp(l, 1, batches);
}

double quantile_sorted(std::span<const double> sorted_values, double q) {
    if (sorted_values.empty()) throw std::invalid_argument("quantile_sorted: empty input");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile_sorted: q must be in [0,1]");
    const double h = q * static_cast<double>(sorted_values.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted_values.size()) return sorted_values.back();
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

namespace {

std::uint64_t replicate_key(const BootstrapConfig& cfg, std::uint64_t stream_id,
                            std::int64_t t, int b) {
    return derive_seed(cfg.seed, {stream_id, static_cast<std::uint64_t>(t),
                                  static_cast<std::uint64_t>(b)});
}

double resample_mean(std::span<const double> data, std::uint64_t key) {
    Rng rng(key);
    const std::uint64_t n = data.size();
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) sum += data[rng.bounded(n)];
    return sum / static_cast<double>(n);
}

}  // namespace

std::vector<double> bootstrap_means(std::span<const double> data, const BootstrapConfig& cfg,
                                    std::uint64_t stream_id, std::int64_t t) {
    if (data.empty()) throw std::invalid_argument("bootstrap_means: empty data");
    cfg.validate();
    const int B = cfg.replicates;
    const std::uint64_t n = data.size();
    std::vector<double> means(B);

    // Replicates are independent substreams, so four of them are advanced in
    // lockstep to break the serial RNG and accumulator dependence chains.
    // Each replicate's draw sequence is identical to the scalar loop above.
    int b = 0;
    for (; b + 4 <= B; b += 4) {
        Rng r0(replicate_key(cfg, stream_id, t, b));
        Rng r1(replicate_key(cfg, stream_id, t, b + 1));
        Rng r2(replicate_key(cfg, stream_id, t, b + 2));
        Rng r3(replicate_key(cfg, stream_id, t, b + 3));
        double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
        for (std::uint64_t i = 0; i < n; ++i) {
            s0 += data[r0.bounded(n)];
            s1 += data[r1.bounded(n)];
            s2 += data[r2.bounded(n)];
            s3 += data[r3.bounded(n)];
        }
        const double dn = static_cast<double>(n);
        means[b] = s0 / dn;
        means[b + 1] = s1 / dn;
        means[b + 2] = s2 / dn;
        means[b + 3] = s3 / dn;
    }
    for (; b < B; ++b) means[b] = resample_mean(data, replicate_key(cfg, stream_id, t, b));
    return means;
}

Interval bootstrap_ci(std::span<const double> data, const BootstrapConfig& cfg,
                      std::uint64_t stream_id, std::int64_t t) {
    std::vector<double> means = bootstrap_means(data, cfg, stream_id, t);
    std::sort(means.begin(), means.end());
    const auto [q_lo, q_hi] = quantile_levels(cfg);
    return clip_unit(Interval(quantile_sorted(means, q_lo), quantile_sorted(means, q_hi)));
}

}  // namespace acs

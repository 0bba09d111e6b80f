#include "acs/streams.hpp"

#include <stdexcept>

#include "acs/rng.hpp"

namespace acs {

std::vector<StreamRecord> gen_beta_stream(double a, double b, std::int64_t n, std::uint64_t seed) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta stream: shapes must be positive");
    if (n < 0) throw std::invalid_argument("beta stream: negative length");
    Rng rng(seed);
    std::vector<StreamRecord> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= n; ++t) out.push_back({t, rng.beta(a, b)});
    return out;
}

std::vector<StreamRecord> gen_bernoulli_stream(double p, std::int64_t n, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli stream: p outside [0,1]");
    if (n < 0) throw std::invalid_argument("bernoulli stream: negative length");
    Rng rng(seed);
    std::vector<StreamRecord> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= n; ++t) out.push_back({t, rng.bernoulli(p) ? 1.0 : 0.0});
    return out;
}

}  // namespace acs

#include "acs/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "acs/preb.hpp"
#include "acs/streams.hpp"

namespace acs {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

ExperimentRecord make_record(Method m, int rep, std::int64_t t, const Interval& iv,
                             std::uint64_t seed) {
    if (iv.is_empty()) return {m, rep, t, kNan, kNan, kNan, seed};
    return {m, rep, t, iv.lo(), iv.hi(), iv.width(), seed};
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::betting: return "betting";
        case Method::preb: return "preb";
        case Method::bootstrap: return "bootstrap";
    }
    throw std::logic_error("method_name: unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "betting") return Method::betting;
    if (name == "preb") return Method::preb;
    if (name == "bootstrap") return Method::bootstrap;
    return std::nullopt;
}

void SyntheticConfig::validate() const {
    if (!(beta_a > 0.0) || !(beta_b > 0.0))
        throw std::invalid_argument("SyntheticConfig: beta shapes must be positive");
    if (n < 1) throw std::invalid_argument("SyntheticConfig: n must be >= 1");
    if (replications < 1) throw std::invalid_argument("SyntheticConfig: replications must be >= 1");
}

std::vector<ExperimentRecord> run_synthetic_rep(const CsConfig& cfg, const BettingConfig& bcfg,
                                                const BootstrapConfig& bscfg,
                                                const SyntheticConfig& syn, int replication) {
    cfg.validate();
    syn.validate();

    // cfg.alpha is the single source of the confidence level.
    BettingConfig bet_cfg = bcfg;
    bet_cfg.alpha = cfg.alpha;
    bet_cfg.validate();
    BootstrapConfig boot_cfg = bscfg;
    boot_cfg.alpha = cfg.alpha;
    boot_cfg.seed = syn.master_seed;
    boot_cfg.validate();

    const std::uint64_t stream_seed = synthetic_stream_seed(syn.master_seed, replication);
    const auto stream = gen_beta_stream(syn.beta_a, syn.beta_b, syn.n, stream_seed);

    BettingEngine betting(bet_cfg);
    PrEbEngine preb(cfg.alpha);
    BootstrapEngine bootstrap(boot_cfg, static_cast<std::uint64_t>(replication));

    std::vector<Interval> bet_path, preb_path, boot_path;
    bet_path.reserve(stream.size());
    preb_path.reserve(stream.size());
    boot_path.reserve(stream.size());
    for (const auto& rec : stream) {
        bet_path.push_back(betting.step(rec.x));
        preb_path.push_back(preb.step(rec.x));
        boot_path.push_back(bootstrap.step(rec.x));
    }

    std::vector<ExperimentRecord> out;
    out.reserve(3 * stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i)
        out.push_back(make_record(Method::betting, replication, stream[i].t, bet_path[i], stream_seed));
    for (std::size_t i = 0; i < stream.size(); ++i)
        out.push_back(make_record(Method::preb, replication, stream[i].t, preb_path[i], stream_seed));
    for (std::size_t i = 0; i < stream.size(); ++i)
        out.push_back(make_record(Method::bootstrap, replication, stream[i].t, boot_path[i], stream_seed));
    return out;
}

std::vector<ExperimentRecord> run_synthetic(const CsConfig& cfg, const BettingConfig& bcfg,
                                            const BootstrapConfig& bscfg,
                                            const SyntheticConfig& syn) {
    syn.validate();
    std::vector<ExperimentRecord> out;
    out.reserve(static_cast<std::size_t>(3) * syn.replications * static_cast<std::size_t>(syn.n));
    for (int r = 0; r < syn.replications; ++r) {
        auto rep = run_synthetic_rep(cfg, bcfg, bscfg, syn, r);
        out.insert(out.end(), rep.begin(), rep.end());
    }
    return out;
}

std::vector<CoverageSummary> run_baseball(const std::vector<PlayerRecord>& dataset, int R,
                                          const CsConfig& cfg, const BettingConfig& bcfg,
                                          const BootstrapConfig& bscfg, std::uint64_t master_seed) {
    if (dataset.empty()) throw std::invalid_argument("run_baseball: empty dataset");
    if (R < 1) throw std::invalid_argument("run_baseball: replications must be >= 1");
    cfg.validate();

    BettingConfig bet_cfg = bcfg;
    bet_cfg.alpha = cfg.alpha;
    bet_cfg.validate();
    BootstrapConfig boot_cfg = bscfg;
    boot_cfg.alpha = cfg.alpha;
    boot_cfg.seed = master_seed;
    boot_cfg.validate();

    std::vector<CoverageSummary> out;
    out.reserve(dataset.size() * 2);
    for (const auto& player : dataset) {
        if (player.at_bats < 1 || player.hits_45 < 0 || player.hits_45 > player.at_bats)
            throw std::invalid_argument("run_baseball: hits outside [0, at_bats]");
        if (!(player.p_true >= 0.0 && player.p_true <= 1.0))
            throw std::invalid_argument("run_baseball: p_true outside [0,1]");

        int bet_hits = 0, boot_hits = 0;
        double bet_lo_sum = 0.0, bet_hi_sum = 0.0, boot_lo_sum = 0.0, boot_hi_sum = 0.0;
        for (int r = 0; r < R; ++r) {
            const std::uint64_t stream_seed =
                derive_seed(master_seed, {kBaseballStreamTag, static_cast<std::uint64_t>(player.player_id),
                                          static_cast<std::uint64_t>(r)});
            const auto stream =
                gen_bernoulli_stream(player.p_hat45(), player.at_bats, stream_seed);

            BettingEngine betting(bet_cfg);
            const std::uint64_t boot_stream_id =
                (static_cast<std::uint64_t>(player.player_id) << 32) | static_cast<std::uint64_t>(r);
            BootstrapEngine bootstrap(boot_cfg, boot_stream_id);

            Interval bet_iv = Interval::unit();
            for (const auto& rec : stream) {
                bet_iv = betting.step(rec.x);
                bootstrap.step(rec.x);
            }
            // The study stops here and reports once, so the bootstrap side is
            // the full-prefix interval at the stopping time rather than the
            // batch-frozen monitoring state.
            const Interval boot_iv = bootstrap.prefix_interval();

            if (!bet_iv.is_empty() && bet_iv.contains(player.p_true)) ++bet_hits;
            if (!boot_iv.is_empty() && boot_iv.contains(player.p_true)) ++boot_hits;
            bet_lo_sum += bet_iv.is_empty() ? kNan : bet_iv.lo();
            bet_hi_sum += bet_iv.is_empty() ? kNan : bet_iv.hi();
            boot_lo_sum += boot_iv.is_empty() ? kNan : boot_iv.lo();
            boot_hi_sum += boot_iv.is_empty() ? kNan : boot_iv.hi();
        }

        const double denom = static_cast<double>(R);
        out.push_back({player.player_id, Method::betting, bet_hits / denom, bet_lo_sum / denom,
                       bet_hi_sum / denom});
        out.push_back({player.player_id, Method::bootstrap, boot_hits / denom, boot_lo_sum / denom,
                       boot_hi_sum / denom});
    }
    return out;
}

std::optional<double> WidthCurve::mean_width_at(Method m, std::int64_t t) const {
    for (const auto& row : rows)
        if (row.method == m && row.t == t) return row.mean_width;
    return std::nullopt;
}

WidthCurve width_curve(const std::vector<ExperimentRecord>& records) {
    std::map<std::pair<int, std::int64_t>, std::pair<double, std::int64_t>> acc;
    for (const auto& rec : records) {
        auto& cell = acc[{static_cast<int>(rec.method), rec.t}];
        cell.first += rec.width;
        cell.second += 1;
    }
    WidthCurve curve;
    curve.rows.reserve(acc.size());
    for (const auto& [key, cell] : acc)
        curve.rows.push_back(
            {static_cast<Method>(key.first), key.second, cell.first / cell.second});
    return curve;
}

}  // namespace acs

// Experiment orchestration: the synthetic Beta(10,30) width study and the
// 1970 batting study, plus the width-curve summary both feed on.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acs/betting.hpp"
#include "acs/bootstrap.hpp"
#include "acs/interval.hpp"
#include "acs/rng.hpp"

namespace acs {

enum class Method { betting, preb, bootstrap };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// One row of a synthetic run: the interval method `method` reported at time t
// within replication `replication` (stream seeded with `seed`).
struct ExperimentRecord {
    Method method;
    int replication;
    std::int64_t t;
    double lo;
    double hi;
    double width;
    std::uint64_t seed;
};

// One player of the batting dataset. p_true is the season-long batting level
// the intervals are scored against.
struct PlayerRecord {
    int player_id;  // 1..18
    std::string name;
    int hits_45;
    int at_bats;  // 45 throughout
    double p_true;

    double p_hat45() const { return static_cast<double>(hits_45) / at_bats; }
};

// Per-(unit, method) coverage aggregate over R replications.
struct CoverageSummary {
    int id;  // player id (batting study) or stream id
    Method method;
    double coverage_prob;
    double mean_lo;
    double mean_hi;
};

struct SyntheticConfig {
    double beta_a = 10.0;
    double beta_b = 30.0;
    std::int64_t n = 10000;
    int replications = 20;
    std::uint64_t master_seed = 1;

    void validate() const;
};

// Substream tags separating the experiments' seed spaces.
inline constexpr std::uint64_t kSyntheticStreamTag = 1;
inline constexpr std::uint64_t kBaseballStreamTag = 2;

// Per-replication stream seed, exposed so callers can regenerate a stream.
inline std::uint64_t synthetic_stream_seed(std::uint64_t master_seed, int replication) {
    return derive_seed(master_seed, {kSyntheticStreamTag, static_cast<std::uint64_t>(replication)});
}

// One Beta(a,b) stream through all three engines; a record per (method, t),
// methods in enum order. The bootstrap engine resamples under stream id
// `replication` so replications stay independent.
std::vector<ExperimentRecord> run_synthetic_rep(const CsConfig& cfg, const BettingConfig& bcfg,
                                                const BootstrapConfig& bscfg,
                                                const SyntheticConfig& syn, int replication);

// All replications 0..syn.replications-1, concatenated in replication order.
std::vector<ExperimentRecord> run_synthetic(const CsConfig& cfg, const BettingConfig& bcfg,
                                            const BootstrapConfig& bscfg,
                                            const SyntheticConfig& syn);

// For each player: R replications of 45 Bernoulli(p_hat45) at-bats, scored
// against p_true at t=45. Betting reports its running intersection; the
// bootstrap reports the full-prefix interval at the stopping time. Two
// summaries per player, ordered by (player, method).
std::vector<CoverageSummary> run_baseball(const std::vector<PlayerRecord>& dataset, int R,
                                          const CsConfig& cfg, const BettingConfig& bcfg,
                                          const BootstrapConfig& bscfg, std::uint64_t master_seed);

// Mean width per (method, t), rows sorted by (method, t).
struct WidthCurve {
    struct Row {
        Method method;
        std::int64_t t;
        double mean_width;
    };
    std::vector<Row> rows;

    std::optional<double> mean_width_at(Method m, std::int64_t t) const;
};

WidthCurve width_curve(const std::vector<ExperimentRecord>& records);

}  // namespace acs

// anytime-cs: confidence sequences for bounded means, from the command line.
//
// Subcommands:
//   simulate  - synthetic Beta(a,b) study, three methods, results CSV (+ SVGs)
//   baseball  - batting dataset study, coverage summary CSV (+ SVGs)
//   stream    - read observations on stdin, print t,lo,hi per step
//   plot      - render the SVGs for an existing results CSV

#include <algorithm>
#include <climits>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acs/betting.hpp"
#include "acs/bootstrap.hpp"
#include "acs/csv.hpp"
#include "acs/preb.hpp"
#include "acs/simlab.hpp"
#include "acs/svg.hpp"

namespace {

namespace fs = std::filesystem;
using namespace acs;

const char* kBettingColor = "#1f77b4";
const char* kPrebColor = "#2ca02c";
const char* kBootstrapColor = "#d62728";
const char* kTruthColor = "#000000";

const char* method_color(Method m) {
    switch (m) {
        case Method::betting: return kBettingColor;
        case Method::preb: return kPrebColor;
        case Method::bootstrap: return kBootstrapColor;
    }
    return kTruthColor;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output dir: " + dir.string());
}

// Shared knobs; each subcommand registers the subset it uses.
struct Options {
    double alpha = 0.05;
    std::int64_t n = 10000;
    int seeds = 20;
    std::uint64_t seed = 1;
    int grid = 1000;
    int replicates_B = 200;
    int batches_L = 10;
    int replications = 100;
    bool plot = false;
    std::string method = "betting";
    std::string out_dir = "out";
    std::string data_file;
    double beta_a = 10.0;
    double beta_b = 30.0;
};

void add_alpha(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha", o.alpha, "Miscoverage level")
        ->check(CLI::Range(1e-6, 0.999999))
        ->capture_default_str();
}

void add_seed(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Master RNG seed")
        ->envname("ANYTIME_CS_SEED")
        ->capture_default_str();
}

void add_engine_knobs(CLI::App* cmd, Options& o) {
    cmd->add_option("--grid", o.grid, "Betting grid resolution G")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    cmd->add_option("--replicates-B", o.replicates_B, "Bootstrap resamples per step")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd->add_option("--batches-L", o.batches_L, "Bootstrap batch count L")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
}

void add_out(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
}

BettingConfig betting_cfg(const Options& o) {
    BettingConfig cfg;
    cfg.grid_size = o.grid;
    cfg.alpha = o.alpha;
    return cfg;
}

BootstrapConfig bootstrap_cfg(const Options& o) {
    BootstrapConfig cfg;
    cfg.replicates = o.replicates_B;
    cfg.batches = o.batches_L;
    cfg.alpha = o.alpha;
    cfg.seed = o.seed;
    return cfg;
}

// Figure 1(a) analogue: one replication's confidence sequence per method.
std::string render_cs_chart(const std::vector<ExperimentRecord>& records, double mu_truth,
                            bool have_truth) {
    Chart chart;
    chart.title = "Confidence sequences over time";
    chart.x_label = "t";
    chart.y_label = "confidence set";
    chart.x_log10 = true;
    chart.y_min = 0.0;
    chart.y_max = 1.0;
    int rep0 = INT_MAX;
    for (const auto& r : records) rep0 = std::min(rep0, r.replication);
    for (Method m : {Method::betting, Method::preb, Method::bootstrap}) {
        BandSeries band;
        band.label = std::string(method_name(m));
        band.color = method_color(m);
        LineSeries lo_line, hi_line;
        lo_line.color = hi_line.color = band.color;
        for (const auto& r : records) {
            if (r.replication != rep0 || r.method != m) continue;
            band.x.push_back(static_cast<double>(r.t));
            band.lo.push_back(r.lo);
            band.hi.push_back(r.hi);
            lo_line.points.emplace_back(static_cast<double>(r.t), r.lo);
            hi_line.points.emplace_back(static_cast<double>(r.t), r.hi);
        }
        if (band.x.empty()) continue;
        chart.bands.push_back(std::move(band));
        chart.lines.push_back(std::move(lo_line));
        chart.lines.push_back(std::move(hi_line));
    }
    if (have_truth) chart.ref_lines.push_back({mu_truth, kTruthColor});
    return render_svg(chart);
}

// Figure 1(b) analogue: mean interval width per method over t.
std::string render_width_chart(const std::vector<ExperimentRecord>& records) {
    const WidthCurve curve = width_curve(records);
    Chart chart;
    chart.title = "Mean interval width";
    chart.x_label = "t";
    chart.y_label = "width";
    chart.x_log10 = true;
    for (Method m : {Method::betting, Method::preb, Method::bootstrap}) {
        LineSeries line;
        line.label = std::string(method_name(m));
        line.color = method_color(m);
        for (const auto& row : curve.rows)
            if (row.method == m)
                line.points.emplace_back(static_cast<double>(row.t), row.mean_width);
        if (!line.points.empty()) chart.lines.push_back(std::move(line));
    }
    return render_svg(chart);
}

// Figure 2(a) analogue: average interval per player, truth markers when known.
std::string render_interval_chart(const std::vector<CoverageSummary>& rows,
                                  const std::vector<PlayerRecord>& players) {
    Chart chart;
    chart.title = "Average intervals per player";
    chart.x_label = "player";
    chart.y_label = "batting level";
    chart.y_min = 0.0;
    for (Method m : {Method::betting, Method::bootstrap}) {
        SegmentSeries segs;
        segs.label = std::string(method_name(m));
        segs.color = method_color(m);
        const double dx = (m == Method::betting) ? -0.18 : 0.18;
        for (const auto& r : rows)
            if (r.method == m) segs.segs.push_back({r.id + dx, r.mean_lo, r.mean_hi});
        if (!segs.segs.empty()) chart.segments.push_back(std::move(segs));
    }
    if (!players.empty()) {
        MarkerSeries truth;
        truth.label = "true level";
        truth.color = kTruthColor;
        for (const auto& p : players)
            truth.points.emplace_back(static_cast<double>(p.player_id), p.p_true);
        chart.markers.push_back(std::move(truth));
    }
    return render_svg(chart);
}

// Figure 2(b) analogue: coverage probability per player and method.
std::string render_coverage_chart(const std::vector<CoverageSummary>& rows, double alpha) {
    Chart chart;
    chart.title = "Coverage probability per player";
    chart.x_label = "player";
    chart.y_label = "coverage";
    chart.y_min = 0.0;
    chart.y_max = 1.05;
    for (Method m : {Method::betting, Method::bootstrap}) {
        BarSeries bars;
        bars.label = std::string(method_name(m));
        bars.color = method_color(m);
        bars.half_width = 0.18;
        const double dx = (m == Method::betting) ? -0.2 : 0.2;
        for (const auto& r : rows)
            if (r.method == m) bars.bars.emplace_back(r.id + dx, r.coverage_prob);
        if (!bars.bars.empty()) chart.bars.push_back(std::move(bars));
    }
    chart.ref_lines.push_back({1.0 - alpha, "#555555"});
    return render_svg(chart);
}

std::vector<PlayerRecord> load_players(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open dataset: " + path);
    auto players = read_players_csv(is);
    if (players.empty()) throw std::runtime_error("dataset has no players: " + path);
    return players;
}

int cmd_simulate(const Options& o) {
    CsConfig cfg;
    cfg.alpha = o.alpha;
    cfg.horizon = o.n;
    SyntheticConfig syn;
    syn.beta_a = o.beta_a;
    syn.beta_b = o.beta_b;
    syn.n = o.n;
    syn.replications = o.seeds;
    syn.master_seed = o.seed;

    const auto records = run_synthetic(cfg, betting_cfg(o), bootstrap_cfg(o), syn);

    ensure_dir(o.out_dir);
    {
        std::ostringstream csv;
        write_synthetic_csv(csv, records);
        write_file(fs::path(o.out_dir) / "synthetic_results.csv", csv.str());
    }
    if (o.plot) {
        const double mu = syn.beta_a / (syn.beta_a + syn.beta_b);
        write_file(fs::path(o.out_dir) / "synthetic_cs.svg", render_cs_chart(records, mu, true));
        write_file(fs::path(o.out_dir) / "synthetic_width.svg", render_width_chart(records));
    }
    return 0;
}

int cmd_baseball(const Options& o) {
    const auto players = load_players(o.data_file);
    CsConfig cfg;
    cfg.alpha = o.alpha;
    cfg.horizon = 45;

    const auto summary =
        run_baseball(players, o.replications, cfg, betting_cfg(o), bootstrap_cfg(o), o.seed);

    ensure_dir(o.out_dir);
    {
        std::ostringstream csv;
        write_baseball_summary_csv(csv, summary);
        write_file(fs::path(o.out_dir) / "baseball_summary.csv", csv.str());
    }
    if (o.plot) {
        write_file(fs::path(o.out_dir) / "baseball_intervals.svg",
                   render_interval_chart(summary, players));
        write_file(fs::path(o.out_dir) / "baseball_coverage.svg",
                   render_coverage_chart(summary, o.alpha));
    }
    return 0;
}

int cmd_stream(const Options& o) {
    const auto method = method_from_name(o.method);
    if (!method) throw std::runtime_error("unknown method: " + o.method);

    BettingEngine betting(betting_cfg(o));
    PrEbEngine preb(o.alpha);
    BootstrapEngine bootstrap(bootstrap_cfg(o), 0);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        if (line.empty()) continue;
        double x;
        try {
            x = parse_double(line);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": not a number: '" + line + "'");
        }
        if (!(x >= 0.0 && x <= 1.0))
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": observation outside [0,1]: " + line);
        Interval iv = Interval::unit();
        switch (*method) {
            case Method::betting: iv = betting.step(x); break;
            case Method::preb: iv = preb.step(x); break;
            case Method::bootstrap: iv = bootstrap.step(x); break;
        }
        if (iv.is_empty()) {
            std::cout << line_no << ",empty,empty\n";
        } else {
            std::cout << line_no << ',' << format_double(iv.lo()) << ','
                      << format_double(iv.hi()) << '\n';
        }
    }
    return 0;
}

int cmd_plot(const Options& o) {
    std::ifstream is(o.data_file, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open results: " + o.data_file);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("empty results file: " + o.data_file);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    is.seekg(0);

    ensure_dir(o.out_dir);
    if (header == "method,replication,t,lo,hi,width") {
        const auto records = read_synthetic_csv(is);
        if (records.empty()) throw std::runtime_error("no rows in: " + o.data_file);
        write_file(fs::path(o.out_dir) / "synthetic_cs.svg", render_cs_chart(records, 0.0, false));
        write_file(fs::path(o.out_dir) / "synthetic_width.svg", render_width_chart(records));
        return 0;
    }
    if (header == "method,player_id,coverage_prob,mean_lo,mean_hi") {
        const auto summary = read_baseball_summary_csv(is);
        if (summary.empty()) throw std::runtime_error("no rows in: " + o.data_file);
        write_file(fs::path(o.out_dir) / "baseball_intervals.svg",
                   render_interval_chart(summary, {}));
        write_file(fs::path(o.out_dir) / "baseball_coverage.svg",
                   render_coverage_chart(summary, o.alpha));
        return 0;
    }
    throw std::runtime_error("unrecognized results header: " + header);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-uniform confidence sequences for bounded means"};
    app.set_config("--config", "", "Read options from an INI/TOML file");
    app.require_subcommand(1);

    Options o;

    CLI::App* sim = app.add_subcommand("simulate", "Synthetic Beta(a,b) comparison study");
    add_alpha(sim, o);
    add_seed(sim, o);
    add_engine_knobs(sim, o);
    add_out(sim, o);
    sim->add_option("--n", o.n, "Stream length")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}))->capture_default_str();
    sim->add_option("--seeds", o.seeds, "Number of replications")->check(CLI::Range(1, 100000))->capture_default_str();
    sim->add_option("--beta-a", o.beta_a, "Beta shape a")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_option("--beta-b", o.beta_b, "Beta shape b")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_flag("--plot", o.plot, "Also write SVG charts");

    CLI::App* bb = app.add_subcommand("baseball", "Batting dataset coverage study");
    add_alpha(bb, o);
    add_seed(bb, o);
    add_engine_knobs(bb, o);
    add_out(bb, o);
    bb->add_option("--replications", o.replications, "Replications per player")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    bb->add_option("--data", o.data_file, "Players CSV")
        ->default_val("data/baseball_1970.csv")
        ->capture_default_str();
    bb->add_flag("--plot", o.plot, "Also write SVG charts");

    CLI::App* st = app.add_subcommand("stream", "Run one engine over stdin observations");
    add_alpha(st, o);
    add_seed(st, o);
    add_engine_knobs(st, o);
    st->add_option("--method", o.method, "Engine to run")
        ->check(CLI::IsMember({"betting", "preb", "bootstrap"}))
        ->capture_default_str();

    CLI::App* pl = app.add_subcommand("plot", "Render SVGs from an existing results CSV");
    add_alpha(pl, o);
    add_out(pl, o);
    pl->add_option("--data", o.data_file, "Results CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return e.get_exit_code();
    }

    try {
        if (sim->parsed()) return cmd_simulate(o);
        if (bb->parsed()) return cmd_baseball(o);
        if (st->parsed()) return cmd_stream(o);
        if (pl->parsed()) return cmd_plot(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

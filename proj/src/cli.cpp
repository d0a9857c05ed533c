#include "csamp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "csamp/graph_store.hpp"
#include "csamp/hw_model.hpp"
#include "csamp/rng.hpp"
#include "csamp/sampler.hpp"
#include "csamp/synthetic.hpp"
#include "csamp/validate.hpp"

namespace csamp::cli {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string hex_seed(std::uint16_t seed) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%04X", seed);
    return buf;
}

const char* mode_name(HwMode m) { return m == HwMode::small ? "small" : "large"; }

/// Accepts 16-bit hex with or without the 0x prefix; 0 is the absorbing LFSR
/// state and is refused.
std::uint16_t parse_seed(const std::string& text) {
    unsigned long value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(text, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value > 0xFFFF)
        throw std::invalid_argument("seed \"" + text + "\" is not a 16-bit hex value");
    if (value == 0)
        throw std::invalid_argument("seed 0 is rejected: it is the absorbing LFSR state");
    return static_cast<std::uint16_t>(value);
}

struct HwFlags {
    double clock_mhz = 250.0;
    std::uint32_t bus_bits = 1024;
    std::uint32_t degree_field_bits = 16;
    std::uint64_t budget_bytes = 4ull * 1024 * 1024;
    std::uint32_t segments = 1;
};

void add_hw_flags(CLI::App* cmd, HwFlags& hw) {
    cmd->add_option("--clock-mhz", hw.clock_mhz, "Modeled clock in MHz")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--bus-bits", hw.bus_bits, "Bus beat width in bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--degree-field-bits", hw.degree_field_bits,
                    "Bits of a beat reserved for the degree")
        ->capture_default_str();
    cmd->add_option("--budget-bytes", hw.budget_bytes,
                    "On-chip storage budget deciding small vs large mode")
        ->capture_default_str();
    cmd->add_option("--segments", hw.segments, "Parallel sampling modules")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
}

HwConfig to_config(const HwFlags& hw) {
    HwConfig cfg;
    cfg.clock_hz = static_cast<std::uint64_t>(hw.clock_mhz * 1e6);
    cfg.bus_bits = hw.bus_bits;
    cfg.degree_field_bits = hw.degree_field_bits;
    cfg.onchip_budget_bytes = hw.budget_bytes;
    cfg.segments = hw.segments;
    return cfg;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

void print_cycle_report(std::ostream& out, const std::string& mode,
                        const CycleReport& r) {
    out << "mode=" << mode << " cycles=" << r.cycles
        << " milliseconds=" << fmt(r.time_seconds * 1000.0)
        << " time_seconds=" << fmt(r.time_seconds)
        << " truncated_nodes=" << r.truncated_nodes
        << " segments_used=" << r.segments_used << "\n";
}

std::string layer_sizes(const ComputationalGraph& cg) {
    std::string sizes;
    for (const auto& layer : cg.layers) {
        if (!sizes.empty()) sizes += ',';
        sizes += std::to_string(layer.size());
    }
    return sizes;
}

struct ConvertArgs {
    std::string input;
    std::string output;
    std::uint64_t num_nodes = 0;
    bool undirected = false;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
    std::ifstream in(a.input);
    if (!in) throw std::runtime_error("cannot open " + a.input);
    const EdgeIndex idx = read_edge_index(in);
    const std::uint64_t n = std::max(a.num_nodes, idx.min_num_nodes);
    const GraphStore g =
        GraphStore::build_from_edge_index(idx.edges, n, a.undirected);
    g.save_file(a.output);
    out << "num_nodes=" << g.num_nodes() << " num_edges=" << g.num_edges()
        << " output=" << a.output << "\n";
    return 0;
}

struct SampleArgs {
    std::string input;
    std::string output;
    std::vector<std::uint32_t> fanouts{15};
    std::uint32_t depth = 2;
    std::string seed = "0xACE1";
    std::string sampler = "concat";
    std::uint32_t root = 0;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
    const GraphStore g = GraphStore::load_file(a.input);
    const std::uint16_t seed = parse_seed(a.seed);
    if (a.fanouts.empty() || a.fanouts[0] == 0)
        throw std::invalid_argument("--num-neighbors must start with a count >= 1");
    const std::uint32_t n = a.fanouts[0];
    if (a.depth == 0) throw std::invalid_argument("--depth must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    Lfsr16 rng(seed);
    const SampleTable table = sample_one_hop(g, rng, n);

    // Demo expansion from --root, so layered sizes are visible per run.
    std::string layers;
    std::uint64_t fallbacks = 0;
    if (g.num_nodes() > 0) {
        if (a.root >= g.num_nodes())
            throw std::invalid_argument("--root " + std::to_string(a.root) +
                                        " out of range");
        std::vector<std::uint32_t> fanouts = a.fanouts;
        if (fanouts.size() == 1)
            fanouts.assign(a.depth, fanouts[0]);
        ComputationalGraph cg;
        if (a.sampler == "concat") {
            cg = concat_expand(table, a.root, a.depth);
        } else if (a.sampler == "stochastic") {
            cg = stochastic_expand(g, rng, a.root, fanouts);
        } else {
            // Degree-weighted importance: a stand-in weight that needs no
            // feature data.
            cg = importance_expand(g, rng, a.root, fanouts,
                                   [&](NodeId u) { return double(g.degree(u)); },
                                   &fallbacks);
        }
        layers = layer_sizes(cg);
    }
    const double ms = elapsed_ms(start);

    table.save_file(a.output);
    out << "num_nodes=" << g.num_nodes() << " n=" << n << " seed=" << hex_seed(seed)
        << " sampler=" << a.sampler << " elapsed_ms=" << fmt(ms)
        << " output=" << a.output << "\n";
    if (!layers.empty()) {
        out << "root=" << a.root << " layers=" << layers;
        if (a.sampler == "importance") out << " uniform_fallbacks=" << fallbacks;
        out << "\n";
    }
    return 0;
}

struct SimulateArgs {
    std::string input;
    std::uint64_t nodes = 0;
    bool nodes_given = false;
    std::uint32_t n = 15;
    std::string seed = "0xACE1";
    HwFlags hw;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const HwConfig cfg = to_config(a.hw);
    if (cfg.clock_hz == 0) throw std::invalid_argument("clock rounds to zero Hz");

    if (a.nodes_given) {
        // Metadata-only: the cycle law needs nothing but the node count.
        const std::uint64_t seg_nodes =
            a.nodes == 0 ? 0 : (a.nodes + cfg.segments - 1) / cfg.segments;
        CycleReport r;
        r.cycles = seg_nodes * a.n;
        r.time_seconds =
            static_cast<double>(r.cycles) / static_cast<double>(cfg.clock_hz);
        r.segments_used = cfg.segments;
        print_cycle_report(out, "metadata", r);
        return 0;
    }

    const GraphStore g = GraphStore::load_file(a.input);
    const std::uint16_t seed = parse_seed(a.seed);
    CycleReport report;
    if (cfg.segments == 1) {
        Lfsr16 rng(seed);
        report = select_mode(g, cfg) == HwMode::small
                     ? simulate_small(g, rng, a.n, cfg).second
                     : simulate_large(g, rng, a.n, cfg).second;
    } else {
        report = simulate_parallel(g, seed, a.n, cfg).second;
    }
    print_cycle_report(out, mode_name(report.mode), report);
    return 0;
}

struct BenchArgs {
    std::string input;
    std::string label;
    std::uint32_t n = 15;
    std::uint32_t depth = 2;
    std::uint32_t repetitions = 5;
    std::string seed = "0xACE1";
    HwFlags hw;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.n == 0) throw std::invalid_argument("--num-neighbors must be at least 1");
    if (a.depth == 0) throw std::invalid_argument("--depth must be at least 1");
    if (a.repetitions == 0)
        throw std::invalid_argument("--repetitions must be at least 1");

    const GraphStore g = GraphStore::load_file(a.input);
    const std::uint16_t seed = parse_seed(a.seed);
    const std::string label = a.label.empty() ? a.input : a.label;

    std::vector<NodeId> batch(std::min<std::uint64_t>(1024, g.num_nodes()));
    std::iota(batch.begin(), batch.end(), NodeId{0});

    std::vector<double> times;
    times.reserve(a.repetitions);
    for (std::uint32_t r = 0; r < a.repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        Lfsr16 rng(seed);
        const SampleTable table = sample_one_hop(g, rng, a.n);
        if (!batch.empty()) minibatch(g, table, batch, a.depth);
        times.push_back(elapsed_ms(start));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double software_ms = times.size() % 2 == 1
                                   ? times[mid]
                                   : (times[mid - 1] + times[mid]) / 2.0;

    const HwConfig cfg = to_config(a.hw);
    const CycleReport report = simulate_parallel(g, seed, a.n, cfg).second;
    const double hardware_ms = report.time_seconds * 1000.0;

    out << "dataset=" << label << " num_nodes=" << g.num_nodes()
        << " num_edges=" << g.num_edges() << " software_ms=" << fmt(software_ms)
        << " hardware_ms=" << fmt(hardware_ms)
        << " speedup=" << fmt(software_ms / hardware_ms)
        << " speedup_basis=host-dependent\n";
    return 0;
}

struct StatsArgs {
    std::string input;
    std::uint32_t cap = 56;
    std::uint32_t n = 15;
    std::string seed = "0xACE1";
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
    if (a.cap == 0) throw std::invalid_argument("--cap must be at least 1");
    const GraphStore g = GraphStore::load_file(a.input);
    const std::uint16_t seed = parse_seed(a.seed);

    // Offset-frequency uniformity on up to four probe nodes with real choice.
    std::uint32_t probes = 0;
    for (std::uint64_t v = 0; v < g.num_nodes() && probes < 4; ++v) {
        const std::uint32_t d = g.degree(static_cast<NodeId>(v));
        if (d < 2) continue;
        Lfsr16 rng(segment_seed(seed, probes));
        FrequencyTable freq;
        freq.node = static_cast<NodeId>(v);
        freq.counts.assign(d, 0);
        freq.trials = 200ull * d;
        for (std::uint64_t i = 0; i < freq.trials; ++i)
            ++freq.counts[bounded(rng.next(), d)];
        const ChiSquare cs = chi_square_uniform(freq, lfsr_residue_proportions(d));
        out << "check=uniformity node=" << v << " degree=" << d
            << " statistic=" << fmt(cs.statistic) << " p_value=" << fmt(cs.p_value)
            << " pass=" << (cs.p_value > 0.001 ? "true" : "false") << "\n";
        ++probes;
    }

    const TruncationStats ts = truncation_stats(g, a.cap);
    out << "check=truncation cap=" << a.cap
        << " truncated_fraction=" << fmt(ts.truncated_fraction)
        << " discarded_edge_fraction=" << fmt(ts.discarded_edge_fraction)
        << " pass=true\n";

    // Mean-aggregation toy pass: constant features must be a fixed point and
    // unit-interval features must stay inside the unit interval.
    bool constant_ok = true;
    bool convex_ok = true;
    if (g.num_nodes() > 0 && a.n > 0) {
        Lfsr16 rng(seed);
        const SampleTable table = sample_one_hop(g, rng, a.n);
        const ComputationalGraph cg = concat_expand(table, 0, 2);

        ToyFeatures constant;
        constant.dim = 4;
        constant.vectors.assign(g.num_nodes(), std::vector<double>(4, 0.625));
        for (const auto& level : mean_aggregate(cg, constant))
            for (double x : level)
                constant_ok = constant_ok && std::abs(x - 0.625) <= 1e-12;

        const ToyFeatures random = ToyFeatures::random(g.num_nodes(), 8, seed);
        for (const auto& level : mean_aggregate(cg, random))
            for (double x : level) convex_ok = convex_ok && x >= 0.0 && x <= 1.0;
    }
    out << "check=aggregation constant_ok=" << (constant_ok ? "true" : "false")
        << " convex_ok=" << (convex_ok ? "true" : "false")
        << " pass=" << (constant_ok && convex_ok ? "true" : "false") << "\n";
    return 0;
}

struct GenArgs {
    std::string output;
    std::uint64_t nodes = 0;
    std::string kind = "uniform";
    std::uint32_t degree = 8;
    std::uint32_t max_degree = 500;
    double exponent = 2.0;
    std::string seed = "0xACE1";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const std::uint16_t seed = parse_seed(a.seed);
    const GraphStore g = a.kind == "uniform"
                             ? uniform_degree_graph(a.nodes, a.degree, seed)
                             : power_law_graph(a.nodes, a.max_degree, a.exponent, seed);
    g.save_file(a.output);
    out << "kind=" << a.kind << " num_nodes=" << g.num_nodes()
        << " num_edges=" << g.num_edges() << " output=" << a.output << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph neighbor sampling with a hardware-accelerator cycle model"};
    app.require_subcommand(1);

    ConvertArgs convert_args;
    CLI::App* convert = app.add_subcommand(
        "convert", "Build graph.bin from a two-column edge-index text file");
    convert->add_option("--input", convert_args.input, "Edge-index text file")
        ->required();
    convert->add_option("--output", convert_args.output, "Graph binary to write")
        ->required();
    convert->add_option("--num-nodes", convert_args.num_nodes,
                        "Node count when it exceeds the highest referenced id");
    convert->add_flag("--undirected", convert_args.undirected,
                      "Also store the reverse of every edge");

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand(
        "sample", "Sample a one-hop table and expand a computational graph");
    sample->add_option("--input", sample_args.input, "Graph binary")->required();
    sample->add_option("--output", sample_args.output, "Sample table to write")
        ->required();
    sample
        ->add_option("--num-neighbors", sample_args.fanouts,
                     "Samples per node; a comma list sets per-level fanouts")
        ->delimiter(',');
    sample->add_option("--depth", sample_args.depth, "Expansion depth K")
        ->capture_default_str();
    sample->add_option("--seed", sample_args.seed, "16-bit hex RNG seed, nonzero")
        ->capture_default_str();
    sample
        ->add_option("--sampler", sample_args.sampler, "Expansion strategy")
        ->check(CLI::IsMember({"concat", "stochastic", "importance"}))
        ->capture_default_str();
    sample->add_option("--root", sample_args.root, "Root node of the demo expansion")
        ->capture_default_str();

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Model accelerator cycles and sampling time");
    CLI::Option* sim_input =
        simulate->add_option("--input", sim_args.input, "Graph binary");
    CLI::Option* sim_nodes = simulate->add_option(
        "--nodes", sim_args.nodes, "Metadata-only node count (no graph needed)");
    sim_nodes->excludes(sim_input);
    simulate->add_option("--num-neighbors", sim_args.n, "Samples per node")
        ->capture_default_str();
    simulate->add_option("--seed", sim_args.seed, "16-bit hex RNG seed, nonzero")
        ->capture_default_str();
    add_hw_flags(simulate, sim_args.hw);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time the software sampler against the modeled hardware");
    bench->add_option("--input", bench_args.input, "Graph binary")->required();
    bench->add_option("--label", bench_args.label, "Dataset label for the record");
    bench->add_option("--num-neighbors", bench_args.n, "Samples per node")
        ->capture_default_str();
    bench->add_option("--depth", bench_args.depth, "Expansion depth K")
        ->capture_default_str();
    bench
        ->add_option("--repetitions", bench_args.repetitions,
                     "Timing repetitions (median reported)")
        ->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "16-bit hex RNG seed, nonzero")
        ->capture_default_str();
    add_hw_flags(bench, bench_args.hw);

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand(
        "stats", "Uniformity, truncation, and aggregation validation checks");
    stats->add_option("--input", stats_args.input, "Graph binary")->required();
    stats->add_option("--cap", stats_args.cap, "Truncation cap to evaluate")
        ->capture_default_str();
    stats->add_option("--num-neighbors", stats_args.n, "Samples per node")
        ->capture_default_str();
    stats->add_option("--seed", stats_args.seed, "16-bit hex RNG seed, nonzero")
        ->capture_default_str();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand(
        "gen", "Generate a synthetic uniform-degree or power-law graph");
    gen->add_option("--output", gen_args.output, "Graph binary to write")->required();
    gen->add_option("--nodes", gen_args.nodes, "Node count")->required();
    gen->add_option("--kind", gen_args.kind, "Graph family")
        ->check(CLI::IsMember({"uniform", "powerlaw"}))
        ->capture_default_str();
    gen->add_option("--degree", gen_args.degree, "Out-degree for kind=uniform")
        ->capture_default_str();
    gen->add_option("--max-degree", gen_args.max_degree,
                    "Degree ceiling for kind=powerlaw")
        ->capture_default_str();
    gen->add_option("--exponent", gen_args.exponent,
                    "Power-law exponent for kind=powerlaw")
        ->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "16-bit hex RNG seed, nonzero")
        ->capture_default_str();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("csamp");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*convert) return cmd_convert(convert_args, out);
        if (*sample) return cmd_sample(sample_args, out);
        if (*simulate) {
            sim_args.nodes_given = sim_nodes->count() > 0;
            if (!sim_args.nodes_given && sim_args.input.empty())
                throw std::invalid_argument("give --input or --nodes");
            return cmd_simulate(sim_args, out);
        }
        if (*bench) return cmd_bench(bench_args, out);
        if (*stats) return cmd_stats(stats_args, out);
        if (*gen) return cmd_gen(gen_args, out);
    } catch (const std::exception& e) {
        err << "csamp: " << e.what() << "\n";
        return 1;
    }
    err << "csamp: no command given\n";
    return 1;
}

}  // namespace csamp::cli

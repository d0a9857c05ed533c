#include "csamp/hw_model.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace csamp {

namespace {

constexpr std::uint32_t no_cap = std::numeric_limits<std::uint32_t>::max();

void check_clock(const HwConfig& cfg) {
    if (cfg.clock_hz == 0)
        throw std::invalid_argument("clock frequency must be positive");
}

/**
 * Samples rows for nodes [begin, end) straight off the degree/prefix/edge
 * arrays: one offset draw per entry, addressed as edge base + offset. With a
 * cap, draws range over min(degree, cap) so only the first cap stored
 * neighbors are reachable. Returns how many nodes in the range exceed the
 * cap. Both simulated paths and every parallel segment funnel through here,
 * which is what makes segments=1 bit-identical to the sequential run.
 */
std::uint64_t sample_range(const GraphStore& g, Lfsr16& rng, std::uint32_t n,
                           std::uint32_t cap, std::uint64_t begin, std::uint64_t end,
                           std::vector<std::vector<NodeId>>& rows) {
    const auto& degrees = g.degree_list();
    const auto& prefix = g.prefix();
    const auto& edge_list = g.edge_list();

    std::uint64_t truncated = 0;
    for (std::uint64_t v = begin; v < end; ++v) {
        const std::uint32_t d = degrees[v];
        if (d > cap) ++truncated;
        const std::uint32_t effective = std::min(d, cap);
        if (effective == 0 || n == 0) continue;
        rows[v].reserve(n);
        for (std::uint32_t i = 0; i < n; ++i)
            rows[v].push_back(edge_list[prefix[v] + bounded(rng.next(), effective)]);
    }
    return truncated;
}

std::uint64_t overhead_cycles(const GraphStore& g, const HwConfig& cfg, HwMode mode) {
    std::uint64_t extra = cfg.pipeline_fill_cycles;
    if (mode == HwMode::large) extra += cfg.beat_load_cycles * g.num_nodes();
    return extra;
}

CycleReport make_report(std::uint64_t cycles, const HwConfig& cfg, HwMode mode,
                        std::uint64_t truncated, std::uint32_t segments) {
    CycleReport r;
    r.cycles = cycles;
    r.time_seconds = static_cast<double>(cycles) / static_cast<double>(cfg.clock_hz);
    r.mode = mode;
    r.truncated_nodes = truncated;
    r.segments_used = segments;
    return r;
}

}  // namespace

std::uint32_t id_bits(std::uint64_t num_nodes) {
    if (num_nodes < 2)
        throw std::invalid_argument("id width is defined for two or more nodes");
    return static_cast<std::uint32_t>(std::bit_width(num_nodes - 1));
}

std::uint32_t ids_per_beat(const HwConfig& cfg, std::uint64_t num_nodes) {
    const std::uint32_t bits = id_bits(num_nodes);
    if (cfg.bus_bits < cfg.degree_field_bits ||
        cfg.bus_bits - cfg.degree_field_bits < bits)
        throw std::invalid_argument("bus of " + std::to_string(cfg.bus_bits) +
                                    " bits cannot carry a " + std::to_string(bits) +
                                    "-bit id beside a " +
                                    std::to_string(cfg.degree_field_bits) +
                                    "-bit degree field");
    return (cfg.bus_bits - cfg.degree_field_bits) / bits;
}

std::uint64_t storage_bytes(const GraphStore& g) {
    return 4 * (g.num_nodes() + g.num_edges());
}

HwMode select_mode(const GraphStore& g, const HwConfig& cfg) {
    return select_mode_for(g.num_nodes(), g.num_edges(), cfg);
}

HwMode select_mode_for(std::uint64_t num_nodes, std::uint64_t num_edges,
                       const HwConfig& cfg) {
    return 4 * (num_nodes + num_edges) <= cfg.onchip_budget_bytes ? HwMode::small
                                                                  : HwMode::large;
}

std::pair<SampleTable, CycleReport> simulate_small(const GraphStore& g, Lfsr16& rng,
                                                   std::uint32_t n, const HwConfig& cfg) {
    check_clock(cfg);
    if (select_mode(g, cfg) != HwMode::small)
        throw std::invalid_argument("graph exceeds the on-chip budget; use the large path");

    std::vector<std::vector<NodeId>> rows(g.num_nodes());
    sample_range(g, rng, n, no_cap, 0, g.num_nodes(), rows);
    const std::uint64_t cycles =
        g.num_nodes() * n + overhead_cycles(g, cfg, HwMode::small);
    return {SampleTable(n, rng.seed(), std::move(rows)),
            make_report(cycles, cfg, HwMode::small, 0, 1)};
}

std::pair<SampleTable, CycleReport> simulate_large(const GraphStore& g, Lfsr16& rng,
                                                   std::uint32_t n, const HwConfig& cfg) {
    check_clock(cfg);
    if (select_mode(g, cfg) != HwMode::large)
        throw std::invalid_argument("graph fits on chip; use the small path");
    const std::uint32_t cap = ids_per_beat(cfg, g.num_nodes());

    std::vector<std::vector<NodeId>> rows(g.num_nodes());
    const std::uint64_t truncated = sample_range(g, rng, n, cap, 0, g.num_nodes(), rows);
    const std::uint64_t cycles =
        g.num_nodes() * n + overhead_cycles(g, cfg, HwMode::large);
    return {SampleTable(n, rng.seed(), std::move(rows)),
            make_report(cycles, cfg, HwMode::large, truncated, 1)};
}

std::pair<SampleTable, CycleReport> simulate_parallel(const GraphStore& g,
                                                      std::uint16_t base_seed,
                                                      std::uint32_t n, const HwConfig& cfg) {
    check_clock(cfg);
    if (cfg.segments == 0 || cfg.segments > 16)
        throw std::invalid_argument("segment count " + std::to_string(cfg.segments) +
                                    " outside [1, 16]");

    const HwMode mode = select_mode(g, cfg);
    const std::uint32_t cap =
        mode == HwMode::large ? ids_per_beat(cfg, g.num_nodes()) : no_cap;
    const SegmentedStore split = g.split_segments(cfg.segments);

    // Segments own disjoint row ranges and private RNG streams, so they can
    // run concurrently; concatenation is implicit in the shared row vector.
    std::vector<std::vector<NodeId>> rows(g.num_nodes());
    std::vector<std::future<std::uint64_t>> workers;
    workers.reserve(split.segments.size());
    for (std::size_t k = 0; k < split.segments.size(); ++k) {
        const GraphSegment& seg = split.segments[k];
        workers.push_back(std::async(std::launch::async, [&, k, seg] {
            Lfsr16 seg_rng(segment_seed(base_seed, static_cast<std::uint32_t>(k)));
            return sample_range(g, seg_rng, n, cap, seg.node_begin, seg.node_end, rows);
        }));
    }

    std::uint64_t truncated = 0;
    for (auto& w : workers) truncated += w.get();

    std::uint64_t max_segment_nodes = 0;
    for (const GraphSegment& seg : split.segments)
        max_segment_nodes = std::max(max_segment_nodes, seg.num_nodes());
    const std::uint64_t cycles =
        max_segment_nodes * n + overhead_cycles(g, cfg, mode);
    return {SampleTable(n, base_seed, std::move(rows)),
            make_report(cycles, cfg, mode, truncated, cfg.segments)};
}

}  // namespace csamp

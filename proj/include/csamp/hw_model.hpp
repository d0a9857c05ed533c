#pragma once

#include <cstdint>
#include <utility>

#include "csamp/graph_store.hpp"
#include "csamp/rng.hpp"
#include "csamp/sampler.hpp"

namespace csamp {

/// Which storage path the accelerator model runs: on-chip BRAM holding the
/// whole graph (small) or beat-loaded neighbor lists with first-beat
/// truncation (large).
enum class HwMode { small, large };

/// Accelerator configuration. Defaults follow the modeled board: 250 MHz
/// clock, 1024-bit bus with a 16-bit degree field, 4 MiB on-chip budget,
/// one sampling module. Fill/load overheads are knobs that default to zero
/// (fully overlapped pipeline).
struct HwConfig {
    std::uint64_t clock_hz = 250'000'000;
    std::uint32_t bus_bits = 1024;
    std::uint32_t degree_field_bits = 16;
    std::uint64_t onchip_budget_bytes = 4ull * 1024 * 1024;
    std::uint32_t segments = 1;
    std::uint64_t pipeline_fill_cycles = 0;
    std::uint64_t beat_load_cycles = 0;
};

/// One simulated run's cost summary. time_seconds is cycles / clock_hz
/// exactly.
struct CycleReport {
    std::uint64_t cycles = 0;
    double time_seconds = 0.0;
    HwMode mode = HwMode::small;
    std::uint64_t truncated_nodes = 0;
    std::uint32_t segments_used = 1;
};

/// Bits needed to store any node ID below num_nodes: ceil(log2(num_nodes)).
/// Throws std::invalid_argument for num_nodes < 2.
std::uint32_t id_bits(std::uint64_t num_nodes);

/// Neighbor IDs per bus beat: floor((bus_bits - degree_field_bits) /
/// id_bits(num_nodes)); the leftover bits carry the degree field. Throws
/// std::invalid_argument when even one ID does not fit.
std::uint32_t ids_per_beat(const HwConfig& cfg, std::uint64_t num_nodes);

/// 32-bit-word footprint of degree list + edge list.
std::uint64_t storage_bytes(const GraphStore& g);

/// small iff storage_bytes(g) <= cfg.onchip_budget_bytes.
HwMode select_mode(const GraphStore& g, const HwConfig& cfg);

/// select_mode from raw counts, for metadata-only runs.
HwMode select_mode_for(std::uint64_t num_nodes, std::uint64_t num_edges,
                       const HwConfig& cfg);

/// BRAM path: bit-exact to sample_one_hop with the same seed; cycles =
/// num_nodes * n plus configured overheads. Throws std::invalid_argument
/// when the graph does not fit the budget.
std::pair<SampleTable, CycleReport> simulate_small(const GraphStore& g, Lfsr16& rng,
                                                   std::uint32_t n, const HwConfig& cfg);

/// Beat-loaded path: each node samples among its first min(degree,
/// ids_per_beat) stored neighbors only; truncated_nodes counts nodes whose
/// degree exceeds the beat capacity. Throws std::invalid_argument when the
/// graph would fit on chip (mode mismatch) or the bus cannot carry one ID.
std::pair<SampleTable, CycleReport> simulate_large(const GraphStore& g, Lfsr16& rng,
                                                   std::uint32_t n, const HwConfig& cfg);

/// Segmented run: cfg.segments balanced node ranges, each sampled with its
/// own derived seed (segment_seed(base_seed, k)), concatenated in node
/// order. cycles = max over segments of segment_nodes * n. segments=1 is
/// bit-identical to the sequential path.
std::pair<SampleTable, CycleReport> simulate_parallel(const GraphStore& g,
                                                      std::uint16_t base_seed,
                                                      std::uint32_t n, const HwConfig& cfg);

}  // namespace csamp

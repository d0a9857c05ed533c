#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "csamp/graph_store.hpp"
#include "csamp/rng.hpp"

namespace csamp {

/**
 * Per-node fixed 1-hop sample sets, the reusable unit of the concatenating
 * sampler. Rows hold exactly num_neighbors sampled IDs for nodes with
 * degree >= 1 (duplicates allowed) and are empty for degree-0 nodes.
 * Immutable once built.
 */
class SampleTable {
public:
    SampleTable() = default;
    SampleTable(std::uint32_t num_neighbors, std::uint16_t seed,
                std::vector<std::vector<NodeId>> rows);

    std::uint32_t num_neighbors() const { return num_neighbors_; }
    std::uint16_t seed() const { return seed_; }
    std::uint64_t num_nodes() const { return rows_.size(); }
    std::span<const NodeId> row(NodeId v) const;
    const std::vector<std::vector<NodeId>>& rows() const { return rows_; }

    bool operator==(const SampleTable&) const = default;

    /// Binary format: magic "CTBL", version u32 LE, num_nodes u64 LE,
    /// n u32 LE, seed u16 zero-padded to u32 LE, then per node a u8 count
    /// followed by count u32 LE sampled IDs. Row lengths above 255 do not fit
    /// the count field and are rejected.
    void save(std::ostream& out) const;
    static SampleTable load(std::istream& in);
    void save_file(const std::string& path) const;
    static SampleTable load_file(const std::string& path);

private:
    std::uint32_t num_neighbors_ = 0;
    std::uint16_t seed_ = 0;
    std::vector<std::vector<NodeId>> rows_;
};

/// Positions of a child (in its own layer) and its parent (one layer up).
struct LevelEdge {
    std::uint32_t child = 0;
    std::uint32_t parent = 0;

    bool operator==(const LevelEdge&) const = default;
};

/**
 * Layered K-depth computational graph rooted at a single node.
 * layers[0] = {root}; layers[j] holds the sampled j-hop frontier.
 * level_edges[j] connects layers[j+1] children to their layers[j] parents,
 * so duplicate node occurrences stay distinguishable by position.
 */
struct ComputationalGraph {
    NodeId root = 0;
    std::vector<std::vector<NodeId>> layers;       // size depth()+1
    std::vector<std::vector<LevelEdge>> level_edges;  // size depth()

    std::uint32_t depth() const {
        return layers.empty() ? 0 : static_cast<std::uint32_t>(layers.size()) - 1;
    }

    /// Edges whose children live in layer `level`, for level in [1, depth()].
    std::span<const LevelEdge> edges_into(std::uint32_t level) const;

    /// Positions in layer `parent_layer`+1 of the children of the occurrence
    /// at (parent_layer, pos).
    std::vector<std::uint32_t> child_positions(std::uint32_t parent_layer,
                                               std::uint32_t pos) const;

    bool operator==(const ComputationalGraph&) const = default;
};

/// Draws n neighbors (with replacement) for every node in ascending ID order:
/// offset = bounded(rng.next(), degree(v)). Degree-0 nodes get empty rows and
/// consume no draws.
SampleTable sample_one_hop(const GraphStore& g, Lfsr16& rng, std::uint32_t n);

/// Expands the fixed 1-hop table to depth k: layer j is the concatenation of
/// t.row(u) over the occurrences u in layer j-1, so every occurrence of a
/// node reuses the same children.
ComputationalGraph concat_expand(const SampleTable& t, NodeId v, std::uint32_t k);

/// Traditional stochastic sampler: every frontier occurrence draws fresh
/// uniform samples, fanouts[j-1] children at level j. Expansion stops early
/// once the frontier dies out, so a degree-0 root yields a single layer.
ComputationalGraph stochastic_expand(const GraphStore& g, Lfsr16& rng, NodeId v,
                                     std::span<const std::uint32_t> fanouts);

/// Like stochastic_expand but children are drawn from the categorical
/// distribution proportional to `weight` over the parent's neighbors.
/// A frontier node whose neighbor weights are all zero falls back to uniform;
/// `uniform_fallbacks`, when given, counts those nodes.
ComputationalGraph importance_expand(const GraphStore& g, Lfsr16& rng, NodeId v,
                                     std::span<const std::uint32_t> fanouts,
                                     const std::function<double(NodeId)>& weight,
                                     std::uint64_t* uniform_fallbacks = nullptr);

/// concat_expand for each batch node against the shared table.
std::vector<ComputationalGraph> minibatch(const GraphStore& g, const SampleTable& t,
                                          std::span<const NodeId> batch,
                                          std::uint32_t k);

}  // namespace csamp

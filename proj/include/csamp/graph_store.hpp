#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace csamp {

/// Node index. Valid values are < num_nodes() of the owning GraphStore.
using NodeId = std::uint32_t;

using Edge = std::pair<NodeId, NodeId>;

class GraphStore;

/// View of a contiguous node range of a parent GraphStore. Spans reference
/// the parent's arrays; the parent must outlive the segment.
struct GraphSegment {
    NodeId node_begin = 0;
    NodeId node_end = 0;  // [node_begin, node_end)
    std::span<const std::uint32_t> degrees;
    std::span<const NodeId> edges;
    std::uint64_t edge_offset = 0;  // parent prefix[node_begin]

    std::uint64_t num_nodes() const { return std::uint64_t{node_end} - node_begin; }
};

/// Ordered node-range segments covering [0, num_nodes) without gaps or overlap.
struct SegmentedStore {
    std::vector<GraphSegment> segments;
};

/**
 * Immutable degree-list / edge-list graph.
 *
 * The edge index is sorted by source node; only the destination column is
 * stored (edge_list). degree_list[v] is v's out-degree and prefix holds the
 * exclusive prefix sums, so v's neighbors live at
 * edge_list[prefix[v] .. prefix[v+1]). Safe to share across threads once built.
 */
class GraphStore {
public:
    GraphStore() = default;

    /// Builds the store from an edge index. Sorting by source is stable, so
    /// duplicate edges and self-loops are preserved in input order. With
    /// `undirected`, each input edge (a,b) also contributes (b,a).
    /// Throws std::invalid_argument naming the first out-of-range edge.
    static GraphStore build_from_edge_index(std::span<const Edge> edges,
                                            std::uint64_t num_nodes,
                                            bool undirected = false);

    /// Assembles a store directly from a degree list and edge list
    /// (degrees must sum to edges.size()).
    static GraphStore from_parts(std::vector<std::uint32_t> degree_list,
                                 std::vector<NodeId> edge_list);

    std::uint64_t num_nodes() const { return degree_list_.size(); }
    std::uint64_t num_edges() const { return edge_list_.size(); }

    /// Out-degree of v, i.e. the degree-list word at offset v.
    std::uint32_t degree(NodeId v) const;

    /// Half-open edge_list position range holding v's neighbors.
    std::pair<std::uint64_t, std::uint64_t> neighbor_slice(NodeId v) const;

    /// v's r-th stored neighbor. Throws std::out_of_range when r >= degree(v)
    /// (an invalid offset address).
    NodeId neighbor_at(NodeId v, std::uint32_t r) const;

    /// Convenience span over v's stored neighbors.
    std::span<const NodeId> neighbors(NodeId v) const;

    /// Splits the node range into s contiguous segments balanced within one
    /// node. Requires 1 <= s <= num_nodes.
    SegmentedStore split_segments(std::uint32_t s) const;

    const std::vector<std::uint32_t>& degree_list() const { return degree_list_; }
    const std::vector<std::uint64_t>& prefix() const { return prefix_; }
    const std::vector<NodeId>& edge_list() const { return edge_list_; }

    bool operator==(const GraphStore&) const = default;

    /// Binary format: magic "CSAM", version u32 LE, num_nodes u64 LE,
    /// edge_count u64 LE, degree_list as u32 LE array, edge_list as u32 LE
    /// array. Prefix sums are recomputed on load.
    void save(std::ostream& out) const;
    static GraphStore load(std::istream& in);
    void save_file(const std::string& path) const;
    static GraphStore load_file(const std::string& path);

private:
    void rebuild_prefix();
    void check_node(NodeId v) const;

    std::vector<std::uint32_t> degree_list_;
    std::vector<std::uint64_t> prefix_;  // length num_nodes+1, prefix_[0] == 0
    std::vector<NodeId> edge_list_;
};

/// Parsed two-column edge-index text.
struct EdgeIndex {
    std::vector<Edge> edges;
    std::uint64_t min_num_nodes = 0;  // max referenced id + 1
};

/// Reads whitespace- or comma-separated "src dst" lines. Lines whose first
/// non-blank character is '#' are comments. Throws std::runtime_error with
/// the offending line number on malformed input.
EdgeIndex read_edge_index(std::istream& in);

}  // namespace csamp

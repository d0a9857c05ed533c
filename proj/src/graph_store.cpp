#include "csamp/graph_store.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wire.hpp"

namespace csamp {

namespace {

constexpr std::uint32_t graph_format_version = 1;

void check_edge(const Edge& e, std::uint64_t num_nodes, std::size_t index) {
    if (e.first >= num_nodes || e.second >= num_nodes) {
        throw std::invalid_argument("edge " + std::to_string(index) + " (" +
                                    std::to_string(e.first) + " -> " +
                                    std::to_string(e.second) +
                                    ") references a node id >= " +
                                    std::to_string(num_nodes));
    }
}

}  // namespace

GraphStore GraphStore::build_from_edge_index(std::span<const Edge> edges,
                                             std::uint64_t num_nodes,
                                             bool undirected) {
    if (num_nodes > std::uint64_t{std::numeric_limits<NodeId>::max()} + 1)
        throw std::invalid_argument("num_nodes exceeds the 32-bit id space");

    GraphStore g;
    g.degree_list_.assign(num_nodes, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        check_edge(edges[i], num_nodes, i);
        ++g.degree_list_[edges[i].first];
        if (undirected) ++g.degree_list_[edges[i].second];
    }
    g.rebuild_prefix();

    // Counting sort by source; a cursor walk in input order keeps the sort
    // stable. An undirected edge lands as (a,b) then (b,a).
    g.edge_list_.resize(g.prefix_.back());
    std::vector<std::uint64_t> cursor(g.prefix_.begin(), g.prefix_.end() - 1);
    for (const Edge& e : edges) {
        g.edge_list_[cursor[e.first]++] = e.second;
        if (undirected) g.edge_list_[cursor[e.second]++] = e.first;
    }
    return g;
}

GraphStore GraphStore::from_parts(std::vector<std::uint32_t> degree_list,
                                  std::vector<NodeId> edge_list) {
    std::uint64_t total = 0;
    for (std::uint32_t d : degree_list) total += d;
    if (total != edge_list.size())
        throw std::invalid_argument("degree list sums to " + std::to_string(total) +
                                    " but edge list holds " +
                                    std::to_string(edge_list.size()) + " entries");
    for (NodeId dst : edge_list)
        if (dst >= degree_list.size())
            throw std::invalid_argument("edge list references node id " +
                                        std::to_string(dst) + " >= " +
                                        std::to_string(degree_list.size()));

    GraphStore g;
    g.degree_list_ = std::move(degree_list);
    g.edge_list_ = std::move(edge_list);
    g.rebuild_prefix();
    return g;
}

void GraphStore::rebuild_prefix() {
    prefix_.assign(degree_list_.size() + 1, 0);
    for (std::size_t i = 0; i < degree_list_.size(); ++i)
        prefix_[i + 1] = prefix_[i] + degree_list_[i];
}

void GraphStore::check_node(NodeId v) const {
    if (v >= num_nodes())
        throw std::out_of_range("node " + std::to_string(v) + " out of range (" +
                                std::to_string(num_nodes()) + " nodes)");
}

std::uint32_t GraphStore::degree(NodeId v) const {
    check_node(v);
    return degree_list_[v];
}

std::pair<std::uint64_t, std::uint64_t> GraphStore::neighbor_slice(NodeId v) const {
    check_node(v);
    return {prefix_[v], prefix_[v + 1]};
}

NodeId GraphStore::neighbor_at(NodeId v, std::uint32_t r) const {
    check_node(v);
    if (r >= degree_list_[v])
        throw std::out_of_range("offset " + std::to_string(r) +
                                " is an invalid address for node " + std::to_string(v) +
                                " (degree " + std::to_string(degree_list_[v]) + ")");
    return edge_list_[prefix_[v] + r];
}

std::span<const NodeId> GraphStore::neighbors(NodeId v) const {
    check_node(v);
    return std::span<const NodeId>(edge_list_).subspan(prefix_[v], degree_list_[v]);
}

SegmentedStore GraphStore::split_segments(std::uint32_t s) const {
    if (s == 0 || s > num_nodes())
        throw std::invalid_argument("segment count " + std::to_string(s) +
                                    " outside [1, " + std::to_string(num_nodes()) + "]");

    // First (num_nodes mod s) segments get one extra node: sizes differ by
    // at most one.
    SegmentedStore out;
    out.segments.reserve(s);
    const std::uint64_t base = num_nodes() / s;
    const std::uint64_t extra = num_nodes() % s;
    NodeId begin = 0;
    for (std::uint32_t k = 0; k < s; ++k) {
        const auto size = static_cast<NodeId>(base + (k < extra ? 1 : 0));
        GraphSegment seg;
        seg.node_begin = begin;
        seg.node_end = begin + size;
        seg.edge_offset = prefix_[begin];
        seg.degrees = std::span<const std::uint32_t>(degree_list_).subspan(begin, size);
        seg.edges = std::span<const NodeId>(edge_list_)
                        .subspan(seg.edge_offset, prefix_[seg.node_end] - seg.edge_offset);
        out.segments.push_back(seg);
        begin = seg.node_end;
    }
    return out;
}

void GraphStore::save(std::ostream& out) const {
    wire::write_magic(out, "CSAM");
    wire::write_u32(out, graph_format_version);
    wire::write_u64(out, num_nodes());
    wire::write_u64(out, num_edges());
    wire::write_u32_array(out, degree_list_);
    wire::write_u32_array(out, edge_list_);
    if (!out) throw std::runtime_error("graph write failed");
}

GraphStore GraphStore::load(std::istream& in) {
    wire::expect_magic(in, "CSAM");
    const std::uint32_t version = wire::read_u32(in);
    if (version != graph_format_version)
        throw std::runtime_error("unsupported graph format version " +
                                 std::to_string(version));
    const std::uint64_t num_nodes = wire::read_u64(in);
    const std::uint64_t num_edges = wire::read_u64(in);
    std::vector<std::uint32_t> degrees = wire::read_u32_array(in, num_nodes);
    std::vector<NodeId> edges = wire::read_u32_array(in, num_edges);
    return from_parts(std::move(degrees), std::move(edges));
}

void GraphStore::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save(out);
}

GraphStore GraphStore::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load(in);
}

EdgeIndex read_edge_index(std::istream& in) {
    EdgeIndex idx;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream fields(line);
        std::uint64_t src, dst;
        if (!(fields >> src >> dst))
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected two node ids");
        std::string trailing;
        if (fields >> trailing)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": trailing content \"" + trailing + "\"");
        constexpr std::uint64_t max_id = std::numeric_limits<NodeId>::max();
        if (src > max_id || dst > max_id)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": node id exceeds 32 bits");
        idx.edges.emplace_back(static_cast<NodeId>(src), static_cast<NodeId>(dst));
        const std::uint64_t hi = std::max(src, dst) + 1;
        idx.min_num_nodes = std::max(idx.min_num_nodes, hi);
    }
    return idx;
}

}  // namespace csamp

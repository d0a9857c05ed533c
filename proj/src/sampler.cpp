#include "csamp/sampler.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "wire.hpp"

namespace csamp {

namespace {

constexpr std::uint32_t table_format_version = 1;

}  // namespace

SampleTable::SampleTable(std::uint32_t num_neighbors, std::uint16_t seed,
                         std::vector<std::vector<NodeId>> rows)
    : num_neighbors_(num_neighbors), seed_(seed), rows_(std::move(rows)) {
    for (std::size_t v = 0; v < rows_.size(); ++v)
        if (!rows_[v].empty() && rows_[v].size() != num_neighbors_)
            throw std::invalid_argument("row for node " + std::to_string(v) + " holds " +
                                        std::to_string(rows_[v].size()) +
                                        " samples, expected " +
                                        std::to_string(num_neighbors_) + " or none");
}

std::span<const NodeId> SampleTable::row(NodeId v) const {
    if (v >= rows_.size())
        throw std::out_of_range("node " + std::to_string(v) + " out of range (" +
                                std::to_string(rows_.size()) + " rows)");
    return rows_[v];
}

void SampleTable::save(std::ostream& out) const {
    wire::write_magic(out, "CTBL");
    wire::write_u32(out, table_format_version);
    wire::write_u64(out, num_nodes());
    wire::write_u32(out, num_neighbors_);
    wire::write_u32(out, seed_);  // u16 value, zero-padded
    for (const auto& row : rows_) {
        if (row.size() > 255)
            throw std::runtime_error("row of " + std::to_string(row.size()) +
                                     " samples exceeds the 8-bit count field");
        wire::write_u8(out, static_cast<std::uint8_t>(row.size()));
        wire::write_u32_array(out, row);
    }
    if (!out) throw std::runtime_error("table write failed");
}

SampleTable SampleTable::load(std::istream& in) {
    wire::expect_magic(in, "CTBL");
    const std::uint32_t version = wire::read_u32(in);
    if (version != table_format_version)
        throw std::runtime_error("unsupported table format version " +
                                 std::to_string(version));
    const std::uint64_t num_nodes = wire::read_u64(in);
    const std::uint32_t n = wire::read_u32(in);
    const std::uint32_t seed = wire::read_u32(in);
    if (seed > 0xFFFF)
        throw std::runtime_error("table seed field exceeds 16 bits");

    std::vector<std::vector<NodeId>> rows(num_nodes);
    for (std::uint64_t v = 0; v < num_nodes; ++v) {
        const std::uint8_t count = wire::read_u8(in);
        rows[v] = wire::read_u32_array(in, count);
    }
    return SampleTable(n, static_cast<std::uint16_t>(seed), std::move(rows));
}

void SampleTable::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save(out);
}

SampleTable SampleTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load(in);
}

std::span<const LevelEdge> ComputationalGraph::edges_into(std::uint32_t level) const {
    if (level == 0 || level > depth())
        throw std::out_of_range("no edge level " + std::to_string(level) +
                                " in a depth-" + std::to_string(depth()) + " graph");
    return level_edges[level - 1];
}

std::vector<std::uint32_t> ComputationalGraph::child_positions(std::uint32_t parent_layer,
                                                               std::uint32_t pos) const {
    if (parent_layer >= depth())
        throw std::out_of_range("layer " + std::to_string(parent_layer) +
                                " has no child layer");
    if (pos >= layers[parent_layer].size())
        throw std::out_of_range("position " + std::to_string(pos) +
                                " out of range in layer " + std::to_string(parent_layer));
    std::vector<std::uint32_t> out;
    for (const LevelEdge& e : level_edges[parent_layer])
        if (e.parent == pos) out.push_back(e.child);
    return out;
}

SampleTable sample_one_hop(const GraphStore& g, Lfsr16& rng, std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("sample count must be at least 1");
    std::vector<std::vector<NodeId>> rows(g.num_nodes());
    for (std::uint64_t v = 0; v < g.num_nodes(); ++v) {
        const auto id = static_cast<NodeId>(v);
        const std::uint32_t d = g.degree(id);
        if (d == 0) continue;  // nothing to draw, no RNG consumed
        rows[v].reserve(n);
        for (std::uint32_t i = 0; i < n; ++i)
            rows[v].push_back(g.neighbor_at(id, bounded(rng.next(), d)));
    }
    return SampleTable(n, rng.seed(), std::move(rows));
}

ComputationalGraph concat_expand(const SampleTable& t, NodeId v, std::uint32_t k) {
    if (k == 0)
        throw std::invalid_argument("expansion depth must be at least 1");
    (void)t.row(v);  // validates the root id

    ComputationalGraph cg;
    cg.root = v;
    cg.layers.reserve(k + 1);
    cg.layers.push_back({v});
    cg.level_edges.reserve(k);
    for (std::uint32_t j = 1; j <= k; ++j) {
        const auto& parents = cg.layers[j - 1];
        std::vector<NodeId> layer;
        std::vector<LevelEdge> edges;
        for (std::size_t p = 0; p < parents.size(); ++p) {
            // The CONCAT step: every occurrence of a node re-attaches the
            // same fixed table row.
            for (NodeId child : t.row(parents[p])) {
                edges.push_back({static_cast<std::uint32_t>(layer.size()),
                                 static_cast<std::uint32_t>(p)});
                layer.push_back(child);
            }
        }
        cg.layers.push_back(std::move(layer));
        cg.level_edges.push_back(std::move(edges));
    }
    return cg;
}

ComputationalGraph stochastic_expand(const GraphStore& g, Lfsr16& rng, NodeId v,
                                     std::span<const std::uint32_t> fanouts) {
    if (fanouts.empty())
        throw std::invalid_argument("fanout list must not be empty");
    (void)g.degree(v);  // validates the root id

    ComputationalGraph cg;
    cg.root = v;
    cg.layers.push_back({v});
    for (std::uint32_t fanout : fanouts) {
        const auto& parents = cg.layers.back();
        std::vector<NodeId> layer;
        std::vector<LevelEdge> edges;
        for (std::size_t p = 0; p < parents.size(); ++p) {
            const std::uint32_t d = g.degree(parents[p]);
            if (d == 0) continue;
            // Fresh draws per occurrence: two occurrences of one node may
            // diverge, unlike the concatenating sampler.
            for (std::uint32_t i = 0; i < fanout; ++i) {
                edges.push_back({static_cast<std::uint32_t>(layer.size()),
                                 static_cast<std::uint32_t>(p)});
                layer.push_back(g.neighbor_at(parents[p], bounded(rng.next(), d)));
            }
        }
        if (layer.empty()) break;  // frontier died out, nothing left to expand
        cg.layers.push_back(std::move(layer));
        cg.level_edges.push_back(std::move(edges));
    }
    return cg;
}

ComputationalGraph importance_expand(const GraphStore& g, Lfsr16& rng, NodeId v,
                                     std::span<const std::uint32_t> fanouts,
                                     const std::function<double(NodeId)>& weight,
                                     std::uint64_t* uniform_fallbacks) {
    if (fanouts.empty())
        throw std::invalid_argument("fanout list must not be empty");
    if (!weight)
        throw std::invalid_argument("weight function must be callable");
    (void)g.degree(v);
    if (uniform_fallbacks) *uniform_fallbacks = 0;

    ComputationalGraph cg;
    cg.root = v;
    cg.layers.push_back({v});
    for (std::uint32_t fanout : fanouts) {
        const auto& parents = cg.layers.back();
        std::vector<NodeId> layer;
        std::vector<LevelEdge> edges;
        std::vector<double> cumulative;
        for (std::size_t p = 0; p < parents.size(); ++p) {
            const std::span<const NodeId> nbrs = g.neighbors(parents[p]);
            if (nbrs.empty()) continue;

            cumulative.clear();
            double total = 0.0;
            for (NodeId u : nbrs) {
                const double w = weight(u);
                if (w < 0.0)
                    throw std::invalid_argument("negative weight for node " +
                                                std::to_string(u));
                total += w;
                cumulative.push_back(total);
            }
            const bool degenerate = total <= 0.0;
            if (degenerate && uniform_fallbacks) ++*uniform_fallbacks;

            for (std::uint32_t i = 0; i < fanout; ++i) {
                std::size_t pick;
                if (degenerate) {
                    pick = bounded(rng.next(), static_cast<std::uint32_t>(nbrs.size()));
                } else {
                    // Inverse-CDF draw on a [0,1) grid derived from the raw
                    // 16-bit stream.
                    const double u = (rng.next() - 1) / 65535.0;
                    const double target = u * total;
                    pick = 0;
                    while (pick + 1 < cumulative.size() && cumulative[pick] <= target)
                        ++pick;
                }
                edges.push_back({static_cast<std::uint32_t>(layer.size()),
                                 static_cast<std::uint32_t>(p)});
                layer.push_back(nbrs[pick]);
            }
        }
        if (layer.empty()) break;  // frontier died out, nothing left to expand
        cg.layers.push_back(std::move(layer));
        cg.level_edges.push_back(std::move(edges));
    }
    return cg;
}

std::vector<ComputationalGraph> minibatch(const GraphStore& g, const SampleTable& t,
                                          std::span<const NodeId> batch,
                                          std::uint32_t k) {
    if (batch.empty())
        throw std::invalid_argument("batch must not be empty");
    if (g.num_nodes() != t.num_nodes())
        throw std::invalid_argument("table covers " + std::to_string(t.num_nodes()) +
                                    " nodes but the graph has " +
                                    std::to_string(g.num_nodes()));
    std::vector<ComputationalGraph> out;
    out.reserve(batch.size());
    for (NodeId v : batch) out.push_back(concat_expand(t, v, k));
    return out;
}

}  // namespace csamp

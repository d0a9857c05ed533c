#include "csamp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace csamp {

GraphStore uniform_degree_graph(std::uint64_t num_nodes, std::uint32_t degree,
                                std::uint64_t seed) {
    if (degree >= num_nodes)
        throw std::invalid_argument("degree " + std::to_string(degree) +
                                    " is infeasible with " +
                                    std::to_string(num_nodes) + " nodes");
    std::mt19937_64 gen(seed);
    std::vector<std::uint32_t> degrees(num_nodes, degree);
    std::vector<NodeId> edges;
    edges.reserve(num_nodes * degree);
    std::vector<NodeId> ring(degree);
    for (std::uint64_t v = 0; v < num_nodes; ++v) {
        for (std::uint32_t i = 0; i < degree; ++i)
            ring[i] = static_cast<NodeId>((v + 1 + i) % num_nodes);
        std::shuffle(ring.begin(), ring.end(), gen);
        edges.insert(edges.end(), ring.begin(), ring.end());
    }
    return GraphStore::from_parts(std::move(degrees), std::move(edges));
}

GraphStore power_law_graph(std::uint64_t num_nodes, std::uint32_t max_degree,
                           double exponent, std::uint64_t seed) {
    if (num_nodes < 2)
        throw std::invalid_argument("power-law graph needs at least two nodes");
    if (max_degree == 0 || max_degree >= num_nodes)
        throw std::invalid_argument("max degree must lie in [1, num_nodes)");

    // Inverse-transform sampling on the discrete distribution P(d) ∝ d^-a
    // over [1, max_degree].
    std::vector<double> cdf(max_degree);
    double total = 0.0;
    for (std::uint32_t d = 1; d <= max_degree; ++d) {
        total += std::pow(static_cast<double>(d), -exponent);
        cdf[d - 1] = total;
    }

    std::mt19937_64 gen(seed);
    const auto uniform01 = [&] {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };

    std::vector<std::uint32_t> degrees(num_nodes);
    for (auto& d : degrees) {
        const double target = uniform01() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
        d = static_cast<std::uint32_t>(it - cdf.begin()) + 1;
        d = std::min(d, max_degree);
    }
    degrees[0] = max_degree;  // guarantee the tail is present

    std::uint64_t num_edges = 0;
    for (std::uint32_t d : degrees) num_edges += d;
    std::vector<NodeId> edges;
    edges.reserve(num_edges);
    for (std::uint64_t v = 0; v < num_nodes; ++v) {
        for (std::uint32_t i = 0; i < degrees[v]; ++i) {
            // Uniform target, re-drawn on self-loop; duplicates are fine.
            NodeId dst;
            do {
                dst = static_cast<NodeId>(gen() % num_nodes);
            } while (dst == v);
            edges.push_back(dst);
        }
    }
    return GraphStore::from_parts(std::move(degrees), std::move(edges));
}

}  // namespace csamp

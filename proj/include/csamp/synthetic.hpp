#pragma once

#include <cstdint>

#include "csamp/graph_store.hpp"

namespace csamp {

/// Directed graph where every node has exactly `degree` distinct neighbors
/// (circulant layout shuffled per node). Requires degree < num_nodes.
GraphStore uniform_degree_graph(std::uint64_t num_nodes, std::uint32_t degree,
                                std::uint64_t seed);

/// Directed graph with heavy-tailed out-degrees: degrees follow a discrete
/// power law with the given exponent, clipped to [1, max_degree], and at
/// least one node is pinned at max_degree. Neighbors are drawn uniformly
/// (self-loops avoided, duplicates possible).
GraphStore power_law_graph(std::uint64_t num_nodes, std::uint32_t max_degree,
                           double exponent, std::uint64_t seed);

}  // namespace csamp

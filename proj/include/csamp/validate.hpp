#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csamp/graph_store.hpp"
#include "csamp/sampler.hpp"

namespace csamp {

/// Observed sample counts for one probe node, one slot per neighbor class.
/// Invariant: sum(counts) == trials.
struct FrequencyTable {
    NodeId node = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t trials = 0;
};

/// Pearson goodness-of-fit result.
struct ChiSquare {
    double statistic = 0.0;
    double p_value = 0.0;
};

/// Equal proportions 1/d per class.
std::vector<double> uniform_proportions(std::uint32_t d);

/// Expected residue-class proportions when a full-period 16-bit LFSR stream
/// (values 1..65535) is reduced mod d: each class lands on floor(65535/d) or
/// ceil(65535/d) hits, never uniform unless d divides 65535.
std::vector<double> lfsr_residue_proportions(std::uint32_t d);

/// Pearson chi-square of the observed counts against per-class expected
/// proportions; p-value from the chi-square survival function with
/// (classes - 1) degrees of freedom. Throws std::invalid_argument for a
/// single-class table, mismatched proportion length, inconsistent trial
/// count, or trials below 100 per class.
ChiSquare chi_square_uniform(const FrequencyTable& f,
                             const std::vector<double>& expected);

/// Structural cost of first-`cap` truncation: fraction of nodes with degree
/// above cap and fraction of all edges lying beyond position cap in their
/// node's list. Throws std::invalid_argument for cap = 0.
struct TruncationStats {
    double truncated_fraction = 0.0;
    double discarded_edge_fraction = 0.0;
};
TruncationStats truncation_stats(const GraphStore& g, std::uint32_t cap);

/// Per-node real feature vectors, all of length dim.
struct ToyFeatures {
    std::uint32_t dim = 0;
    std::vector<std::vector<double>> vectors;

    /// Deterministic pseudo-random fill in [0,1), one vector per node.
    static ToyFeatures random(std::uint64_t num_nodes, std::uint32_t dim,
                              std::uint64_t seed);
};

/// Mean aggregation over a computational graph, bottom-up: each occurrence
/// aggregates a = (h_self + sum of child aggregates) / (children + 1), with
/// leaves holding their raw features. Entry k of the result is the root's
/// aggregate when expansion stops at layer k (entry 0 = raw root feature).
/// No weights or nonlinearity are applied. Throws std::out_of_range naming
/// the node when a feature vector is missing.
std::vector<std::vector<double>> mean_aggregate(const ComputationalGraph& cg,
                                                const ToyFeatures& feats);

}  // namespace csamp

#include "csamp/validate.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

namespace csamp {

std::vector<double> uniform_proportions(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("class count must be positive");
    return std::vector<double>(d, 1.0 / d);
}

std::vector<double> lfsr_residue_proportions(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("class count must be positive");
    // The raw stream visits each value in [1, 65535] exactly once per period,
    // so class c collects every such value congruent to c mod d.
    constexpr std::uint32_t period = 65535;
    std::vector<double> p(d);
    for (std::uint32_t c = 0; c < d; ++c) {
        std::uint32_t hits = c <= period ? (period - c) / d + 1 : 0;
        if (c == 0) --hits;  // value 0 never appears
        p[c] = static_cast<double>(hits) / period;
    }
    return p;
}

ChiSquare chi_square_uniform(const FrequencyTable& f,
                             const std::vector<double>& expected) {
    const std::size_t classes = f.counts.size();
    if (classes < 2)
        throw std::invalid_argument("goodness-of-fit needs at least two classes");
    if (expected.size() != classes)
        throw std::invalid_argument("got " + std::to_string(expected.size()) +
                                    " expected proportions for " +
                                    std::to_string(classes) + " classes");

    std::uint64_t total = 0;
    for (std::uint64_t c : f.counts) total += c;
    if (total != f.trials)
        throw std::invalid_argument("counts sum to " + std::to_string(total) +
                                    " but trials is " + std::to_string(f.trials));
    if (f.trials < 100 * classes)
        throw std::invalid_argument("need at least 100 trials per class");

    double statistic = 0.0;
    for (std::size_t c = 0; c < classes; ++c) {
        if (expected[c] <= 0.0)
            throw std::invalid_argument("expected proportions must be positive");
        const double exp_count = static_cast<double>(f.trials) * expected[c];
        const double diff = static_cast<double>(f.counts[c]) - exp_count;
        statistic += diff * diff / exp_count;
    }

    const boost::math::chi_squared dist(static_cast<double>(classes - 1));
    ChiSquare out;
    out.statistic = statistic;
    out.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
    return out;
}

TruncationStats truncation_stats(const GraphStore& g, std::uint32_t cap) {
    if (cap == 0)
        throw std::invalid_argument("truncation cap must be at least 1");
    std::uint64_t truncated = 0;
    std::uint64_t discarded = 0;
    for (std::uint32_t d : g.degree_list()) {
        if (d > cap) {
            ++truncated;
            discarded += d - cap;
        }
    }
    TruncationStats out;
    if (g.num_nodes() > 0)
        out.truncated_fraction =
            static_cast<double>(truncated) / static_cast<double>(g.num_nodes());
    if (g.num_edges() > 0)
        out.discarded_edge_fraction =
            static_cast<double>(discarded) / static_cast<double>(g.num_edges());
    return out;
}

ToyFeatures ToyFeatures::random(std::uint64_t num_nodes, std::uint32_t dim,
                                std::uint64_t seed) {
    ToyFeatures f;
    f.dim = dim;
    f.vectors.resize(num_nodes);
    std::mt19937_64 gen(seed);
    for (auto& vec : f.vectors) {
        vec.resize(dim);
        for (double& x : vec)
            x = static_cast<double>(gen() >> 11) * 0x1.0p-53;  // uniform [0,1)
    }
    return f;
}

std::vector<std::vector<double>> mean_aggregate(const ComputationalGraph& cg,
                                                const ToyFeatures& feats) {
    if (cg.layers.empty())
        throw std::invalid_argument("computational graph has no layers");
    const auto feature = [&](NodeId v) -> const std::vector<double>& {
        if (v >= feats.vectors.size())
            throw std::out_of_range("no feature vector for node " + std::to_string(v));
        return feats.vectors[v];
    };

    // Children of each occurrence, by position, once per level.
    std::vector<std::vector<std::vector<std::uint32_t>>> children(cg.depth());
    for (std::uint32_t j = 0; j < cg.depth(); ++j) {
        children[j].resize(cg.layers[j].size());
        for (const LevelEdge& e : cg.level_edges[j])
            children[j][e.parent].push_back(e.child);
    }

    std::vector<std::vector<double>> result(cg.depth() + 1);
    for (std::uint32_t k = 0; k <= cg.depth(); ++k) {
        // Bottom-up pass with leaves at layer k: each occurrence averages its
        // own raw feature with its children's aggregates.
        std::vector<std::vector<double>> level;  // aggregates of layer j+1
        for (std::uint32_t j = k + 1; j-- > 0;) {
            std::vector<std::vector<double>> current(cg.layers[j].size());
            for (std::size_t p = 0; p < cg.layers[j].size(); ++p) {
                std::vector<double> acc = feature(cg.layers[j][p]);
                std::size_t members = 1;
                if (j < k) {
                    for (std::uint32_t c : children[j][p]) {
                        const std::vector<double>& child = level[c];
                        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += child[i];
                        ++members;
                    }
                }
                for (double& x : acc) x /= static_cast<double>(members);
                current[p] = std::move(acc);
            }
            level = std::move(current);
        }
        result[k] = level.empty() ? feature(cg.root) : level[0];
    }
    return result;
}

}  // namespace csamp

#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csamp/graph_store.hpp"
#include "csamp/rng.hpp"
#include "csamp/sampler.hpp"
#include "csamp/synthetic.hpp"
#include "csamp/validate.hpp"

using namespace csamp;

namespace {

GraphStore toy_graph() {
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 0}, {2, 0}, {2, 3}, {3, 2}};
    return GraphStore::build_from_edge_index(edges, 4);
}

GraphStore star_graph() {
    std::vector<std::uint32_t> degrees(101, 0);
    degrees[0] = 100;
    std::vector<NodeId> edges(100);
    for (NodeId i = 0; i < 100; ++i) edges[i] = i + 1;
    return GraphStore::from_parts(std::move(degrees), std::move(edges));
}

// Independent recursive oracle: aggregate of the occurrence at (layer, pos)
// when leaves sit at layer k, reading children straight off level_edges.
std::vector<double> recursive_mean(const ComputationalGraph& cg,
                                   const ToyFeatures& feats, std::uint32_t layer,
                                   std::uint32_t pos, std::uint32_t k) {
    std::vector<double> acc = feats.vectors[cg.layers[layer][pos]];
    if (layer == k) return acc;
    std::size_t members = 1;
    for (const LevelEdge& e : cg.level_edges[layer]) {
        if (e.parent != pos) continue;
        const std::vector<double> child = recursive_mean(cg, feats, layer + 1, e.child, k);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += child[i];
        ++members;
    }
    for (double& x : acc) x /= static_cast<double>(members);
    return acc;
}

}  // namespace

TEST_SUITE("validate") {

TEST_CASE("proportion helpers") {
    const auto uniform = uniform_proportions(4);
    REQUIRE(uniform.size() == 4);
    for (double p : uniform) CHECK(p == 0.25);

    // 65535 = 1170*56 + 15: classes 1..15 collect 1171 values, the rest 1170.
    const auto biased = lfsr_residue_proportions(56);
    REQUIRE(biased.size() == 56);
    CHECK(biased[0] == doctest::Approx(1170.0 / 65535).epsilon(1e-12));
    CHECK(biased[1] == doctest::Approx(1171.0 / 65535).epsilon(1e-12));
    CHECK(biased[15] == doctest::Approx(1171.0 / 65535).epsilon(1e-12));
    CHECK(biased[16] == doctest::Approx(1170.0 / 65535).epsilon(1e-12));
    CHECK(biased[55] == doctest::Approx(1170.0 / 65535).epsilon(1e-12));

    double sum = 0.0;
    for (double p : biased) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(uniform_proportions(0), std::invalid_argument);
    CHECK_THROWS_AS(lfsr_residue_proportions(0), std::invalid_argument);
}

TEST_CASE("chi-square statistic matches the by-hand arithmetic") {
    FrequencyTable f;
    f.node = 0;
    f.counts = {60, 140};
    f.trials = 200;
    const ChiSquare cs = chi_square_uniform(f, uniform_proportions(2));
    // (60-100)^2/100 + (140-100)^2/100
    CHECK(cs.statistic == doctest::Approx(32.0).epsilon(1e-12));
    // One degree of freedom: P(X > s) = erfc(sqrt(s/2)).
    CHECK(cs.p_value == doctest::Approx(std::erfc(4.0)).epsilon(1e-9));
}

TEST_CASE("perfectly proportional counts give statistic 0 and p-value 1") {
    FrequencyTable f;
    f.counts = {250, 250, 250, 250};
    f.trials = 1000;
    const ChiSquare cs = chi_square_uniform(f, uniform_proportions(4));
    CHECK(cs.statistic == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cs.p_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("full-period residues fit the bias proportions exactly") {
    for (std::uint32_t d : {3u, 56u}) {
        FrequencyTable f;
        f.counts.assign(d, 0);
        f.trials = Lfsr16::period;
        Lfsr16 rng(0x0001);
        for (std::uint32_t i = 0; i < Lfsr16::period; ++i)
            ++f.counts[bounded(rng.next(), d)];
        const ChiSquare cs = chi_square_uniform(f, lfsr_residue_proportions(d));
        CHECK(cs.statistic < 1e-9);
        CHECK(cs.p_value > 0.999);
    }
}

TEST_CASE("chi-square input validation") {
    FrequencyTable f;
    f.counts = {500};
    f.trials = 500;
    CHECK_THROWS_AS(chi_square_uniform(f, uniform_proportions(1)),
                    std::invalid_argument);

    f.counts = {100, 99};
    f.trials = 199;
    CHECK_THROWS_AS(chi_square_uniform(f, uniform_proportions(2)),
                    std::invalid_argument);  // fewer than 100 per class

    f.counts = {150, 150};
    f.trials = 999;
    CHECK_THROWS_AS(chi_square_uniform(f, uniform_proportions(2)),
                    std::invalid_argument);  // counts disagree with trials

    f.trials = 300;
    CHECK_THROWS_AS(chi_square_uniform(f, uniform_proportions(3)),
                    std::invalid_argument);  // proportion length mismatch
}

TEST_CASE("truncation statistics count nodes and edges past the cap") {
    SUBCASE("tiny degrees are untouched at cap 56") {
        const TruncationStats ts = truncation_stats(toy_graph(), 56);
        CHECK(ts.truncated_fraction == 0.0);
        CHECK(ts.discarded_edge_fraction == 0.0);
    }

    SUBCASE("star center discards 44 of its 100 edges") {
        const TruncationStats ts = truncation_stats(star_graph(), 56);
        CHECK(ts.truncated_fraction == doctest::Approx(1.0 / 101).epsilon(1e-12));
        CHECK(ts.discarded_edge_fraction == doctest::Approx(0.44).epsilon(1e-12));
    }

    SUBCASE("cap 1 truncates the toy graph's two degree-2 nodes") {
        const TruncationStats ts = truncation_stats(toy_graph(), 1);
        CHECK(ts.truncated_fraction == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(ts.discarded_edge_fraction == doctest::Approx(2.0 / 6).epsilon(1e-12));
    }

    SUBCASE("discarded fraction is non-increasing in the cap") {
        const GraphStore g = power_law_graph(300, 40, 1.5, 11);
        double last = 1.0;
        for (std::uint32_t cap = 1; cap <= 45; ++cap) {
            const double now = truncation_stats(g, cap).discarded_edge_fraction;
            CHECK(now <= last);
            last = now;
        }
    }

    SUBCASE("cap zero is rejected") {
        CHECK_THROWS_AS(truncation_stats(toy_graph(), 0), std::invalid_argument);
    }
}

TEST_CASE("toy features are deterministic and inside the unit interval") {
    const ToyFeatures a = ToyFeatures::random(20, 8, 42);
    const ToyFeatures b = ToyFeatures::random(20, 8, 42);
    REQUIRE(a.vectors.size() == 20);
    CHECK(a.vectors == b.vectors);
    for (const auto& vec : a.vectors) {
        REQUIRE(vec.size() == 8);
        for (double x : vec) {
            CHECK(x >= 0.0);
            CHECK(x < 1.0);
        }
    }
}

TEST_CASE("mean aggregation unrolls once as (sum + self) / (n + 1)") {
    // Root 0 with fixed children 1, 2, 3; scalar-ish features in dim 1.
    SampleTable t(3, 0x0001, {{1, 2, 3}, {}, {}, {}});
    const ComputationalGraph cg = concat_expand(t, 0, 1);
    ToyFeatures feats;
    feats.dim = 1;
    feats.vectors = {{10.0}, {2.0}, {4.0}, {6.0}};
    const auto got = mean_aggregate(cg, feats);
    REQUIRE(got.size() == 2);
    CHECK(got[0][0] == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(got[1][0] == doctest::Approx(5.5).epsilon(1e-12));  // (10+2+4+6)/4
}

TEST_CASE("constant features are a fixed point at every depth") {
    const GraphStore g = uniform_degree_graph(30, 4, 17);
    Lfsr16 rng(0xACE1);
    const SampleTable t = sample_one_hop(g, rng, 3);
    const ComputationalGraph cg = concat_expand(t, 5, 3);

    ToyFeatures feats;
    feats.dim = 4;
    feats.vectors.assign(30, std::vector<double>(4, 0.37));
    for (const auto& level : mean_aggregate(cg, feats))
        for (double x : level) CHECK(std::abs(x - 0.37) <= 1e-12);
}

TEST_CASE("depth-2 aggregate equals the recursive oracle") {
    const GraphStore g = uniform_degree_graph(50, 6, 23);
    Lfsr16 rng(0xBEAD);
    const SampleTable t = sample_one_hop(g, rng, 4);
    const ComputationalGraph cg = concat_expand(t, 12, 2);
    const ToyFeatures feats = ToyFeatures::random(50, 8, 99);

    const auto got = mean_aggregate(cg, feats);
    REQUIRE(got.size() == 3);
    for (std::uint32_t k = 0; k <= 2; ++k) {
        const std::vector<double> expected = recursive_mean(cg, feats, 0, 0, k);
        REQUIRE(got[k].size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(std::abs(got[k][i] - expected[i]) <= 1e-12);
    }
}

TEST_CASE("aggregation is linear in the features") {
    const GraphStore g = uniform_degree_graph(25, 3, 31);
    Lfsr16 rng(0xF00D);
    const SampleTable t = sample_one_hop(g, rng, 2);
    const ComputationalGraph cg = concat_expand(t, 7, 2);

    const ToyFeatures feats = ToyFeatures::random(25, 5, 7);
    ToyFeatures scaled = feats;
    for (auto& vec : scaled.vectors)
        for (double& x : vec) x *= 3.0;

    const auto base = mean_aggregate(cg, feats);
    const auto tripled = mean_aggregate(cg, scaled);
    for (std::size_t k = 0; k < base.size(); ++k)
        for (std::size_t i = 0; i < base[k].size(); ++i)
            CHECK(std::abs(tripled[k][i] - 3.0 * base[k][i]) <= 1e-12);
}

TEST_CASE("unit-interval features stay inside the unit interval") {
    const GraphStore g = uniform_degree_graph(40, 5, 13);
    Lfsr16 rng(0xCAFE);
    const SampleTable t = sample_one_hop(g, rng, 4);
    const ComputationalGraph cg = concat_expand(t, 3, 3);
    const ToyFeatures feats = ToyFeatures::random(40, 6, 3);
    for (const auto& level : mean_aggregate(cg, feats))
        for (double x : level) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
        }
}

TEST_CASE("missing feature vectors are reported by node") {
    SampleTable t(2, 0x0001, {{1, 2}, {}, {}});
    const ComputationalGraph cg = concat_expand(t, 0, 1);
    ToyFeatures feats;
    feats.dim = 1;
    feats.vectors = {{1.0}, {2.0}};  // node 2 missing
    CHECK_THROWS_WITH_AS(mean_aggregate(cg, feats), doctest::Contains("node 2"),
                         std::out_of_range);
}

}  // TEST_SUITE

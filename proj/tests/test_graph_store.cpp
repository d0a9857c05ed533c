#include "doctest.h"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "csamp/graph_store.hpp"

using namespace csamp;

namespace {

// Shared fixture: 4 nodes, 6 directed edges.
const std::vector<Edge> toy_edges{{0, 1}, {0, 2}, {1, 0}, {2, 0}, {2, 3}, {3, 2}};

GraphStore toy_graph() { return GraphStore::build_from_edge_index(toy_edges, 4); }

}  // namespace

TEST_SUITE("graph_store") {

TEST_CASE("toy graph builds the hand-enumerated arrays") {
    const GraphStore g = toy_graph();
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 6);
    CHECK(g.degree_list() == std::vector<std::uint32_t>{2, 1, 2, 1});
    CHECK(g.prefix() == std::vector<std::uint64_t>{0, 2, 3, 5, 6});
    CHECK(g.edge_list() == std::vector<NodeId>{1, 2, 0, 0, 3, 2});
}

TEST_CASE("accessors follow the address arithmetic") {
    const GraphStore g = toy_graph();
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.neighbor_slice(2) == std::pair<std::uint64_t, std::uint64_t>{3, 5});
    CHECK(g.neighbor_slice(0) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(g.neighbor_at(2, 1) == 3);
    CHECK(g.neighbor_at(1, 0) == 0);
    CHECK(g.neighbors(2).size() == 2);
    CHECK(g.neighbors(2)[0] == 0);
    CHECK(g.neighbors(2)[1] == 3);
}

TEST_CASE("degree-0 node yields an empty slice") {
    const GraphStore g = GraphStore::build_from_edge_index({}, 3);
    CHECK(g.degree_list() == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(g.prefix() == std::vector<std::uint64_t>{0, 0, 0, 0});
    CHECK(g.edge_list().empty());
    const auto [begin, end] = g.neighbor_slice(1);
    CHECK(begin == end);
    CHECK(g.degree(0) == 0);
}

TEST_CASE("undirected single edge expands to both directions") {
    const std::vector<Edge> edges{{0, 1}};
    const GraphStore g = GraphStore::build_from_edge_index(edges, 2, true);
    CHECK(g.degree_list() == std::vector<std::uint32_t>{1, 1});
    CHECK(g.edge_list() == std::vector<NodeId>{1, 0});
}

TEST_CASE("undirected expansion interleaves forward and reverse in input order") {
    const std::vector<Edge> edges{{0, 1}, {2, 0}};
    const GraphStore g = GraphStore::build_from_edge_index(edges, 3, true);
    CHECK(g.degree_list() == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(g.edge_list() == std::vector<NodeId>{1, 2, 0, 0});
}

TEST_CASE("sorting is stable, so duplicates keep input order") {
    const std::vector<Edge> edges{{1, 5}, {0, 9}, {1, 5}, {1, 2}};
    const GraphStore g = GraphStore::build_from_edge_index(edges, 10);
    CHECK(g.neighbors(1).size() == 3);
    CHECK(g.neighbors(1)[0] == 5);
    CHECK(g.neighbors(1)[1] == 5);
    CHECK(g.neighbors(1)[2] == 2);
}

TEST_CASE("out-of-range edges are rejected by index") {
    const std::vector<Edge> edges{{0, 1}, {7, 2}};
    CHECK_THROWS_WITH_AS(GraphStore::build_from_edge_index(edges, 4, false),
                         doctest::Contains("edge 1"), std::invalid_argument);
}

TEST_CASE("invalid offsets and node ids throw") {
    const GraphStore g = toy_graph();
    CHECK_THROWS_AS(g.neighbor_at(1, 1), std::out_of_range);  // r == degree
    CHECK_THROWS_AS(g.degree(4), std::out_of_range);
    CHECK_THROWS_AS(g.neighbor_slice(100), std::out_of_range);
}

TEST_CASE("from_parts checks degree/edge consistency") {
    CHECK_THROWS_AS(GraphStore::from_parts({2, 1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GraphStore::from_parts({1}, {5}), std::invalid_argument);
    const GraphStore g = GraphStore::from_parts({2, 0}, {1, 1});
    CHECK(g.num_edges() == 2);
    CHECK(g == GraphStore::build_from_edge_index({{{0, 1}, {0, 1}}}, 2));
}

TEST_CASE("split keeps segments balanced and lossless") {
    const GraphStore g = toy_graph();

    SUBCASE("identity split") {
        const SegmentedStore s = g.split_segments(1);
        REQUIRE(s.segments.size() == 1);
        CHECK(s.segments[0].node_begin == 0);
        CHECK(s.segments[0].node_end == 4);
        CHECK(s.segments[0].edges.size() == 6);
    }

    SUBCASE("even split") {
        const SegmentedStore s = g.split_segments(2);
        REQUIRE(s.segments.size() == 2);
        CHECK(s.segments[0].node_begin == 0);
        CHECK(s.segments[0].node_end == 2);
        CHECK(s.segments[1].node_begin == 2);
        CHECK(s.segments[1].node_end == 4);
        CHECK(std::vector<NodeId>(s.segments[0].edges.begin(), s.segments[0].edges.end()) ==
              std::vector<NodeId>{1, 2, 0});
        CHECK(std::vector<NodeId>(s.segments[1].edges.begin(), s.segments[1].edges.end()) ==
              std::vector<NodeId>{0, 3, 2});
    }

    SUBCASE("one node per segment concatenates back to the edge list") {
        const SegmentedStore s = g.split_segments(4);
        REQUIRE(s.segments.size() == 4);
        std::vector<NodeId> glued;
        for (const GraphSegment& seg : s.segments) {
            CHECK(seg.num_nodes() == 1);
            glued.insert(glued.end(), seg.edges.begin(), seg.edges.end());
        }
        CHECK(glued == g.edge_list());
    }

    SUBCASE("uneven split differs by at most one node") {
        const SegmentedStore s = g.split_segments(3);
        REQUIRE(s.segments.size() == 3);
        CHECK(s.segments[0].num_nodes() == 2);
        CHECK(s.segments[1].num_nodes() == 1);
        CHECK(s.segments[2].num_nodes() == 1);
    }

    SUBCASE("degenerate counts are rejected") {
        CHECK_THROWS_AS(g.split_segments(0), std::invalid_argument);
        CHECK_THROWS_AS(g.split_segments(5), std::invalid_argument);
    }
}

TEST_CASE("binary round trip preserves the store") {
    const GraphStore g = toy_graph();
    std::stringstream buf;
    g.save(buf);
    const GraphStore back = GraphStore::load(buf);
    CHECK(back == g);
}

TEST_CASE("binary layout matches the hand-written golden bytes") {
    // magic, version 1, num_nodes 4, edge_count 6, degrees, edges — all LE.
    const unsigned char golden[] = {
        'C', 'S', 'A', 'M',
        0x01, 0x00, 0x00, 0x00,
        0x04, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x06, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x02, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00,
        0x02, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00,
        0x01, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00,
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x03, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00,
    };
    std::stringstream buf;
    toy_graph().save(buf);
    const std::string bytes = buf.str();
    REQUIRE(bytes.size() == sizeof golden);
    for (std::size_t i = 0; i < sizeof golden; ++i)
        CHECK(static_cast<unsigned char>(bytes[i]) == golden[i]);
}

TEST_CASE("corrupt graph files are refused") {
    SUBCASE("bad magic") {
        std::stringstream buf("XXXXrest");
        CHECK_THROWS_WITH_AS(GraphStore::load(buf), doctest::Contains("magic"),
                             std::runtime_error);
    }
    SUBCASE("truncated payload") {
        std::stringstream buf;
        toy_graph().save(buf);
        std::stringstream cut(buf.str().substr(0, 30));
        CHECK_THROWS_WITH_AS(GraphStore::load(cut), doctest::Contains("truncated"),
                             std::runtime_error);
    }
}

TEST_CASE("edge-index text accepts comments, commas, and blank lines") {
    std::stringstream text("# header\n0 1\n0,2\n\n  # indented comment\n1 0\n");
    const EdgeIndex idx = read_edge_index(text);
    REQUIRE(idx.edges.size() == 3);
    CHECK(idx.edges[0] == Edge{0, 1});
    CHECK(idx.edges[1] == Edge{0, 2});
    CHECK(idx.edges[2] == Edge{1, 0});
    CHECK(idx.min_num_nodes == 3);
}

TEST_CASE("edge-index text errors carry the line number") {
    SUBCASE("non-numeric fields") {
        std::stringstream text("0 1\na b c\n");
        CHECK_THROWS_WITH_AS(read_edge_index(text), doctest::Contains("line 2"),
                             std::runtime_error);
    }
    SUBCASE("trailing third column") {
        std::stringstream text("1 2 3\n");
        CHECK_THROWS_WITH_AS(read_edge_index(text), doctest::Contains("line 1"),
                             std::runtime_error);
    }
    SUBCASE("missing destination") {
        std::stringstream text("0 1\n\n42\n");
        CHECK_THROWS_WITH_AS(read_edge_index(text), doctest::Contains("line 3"),
                             std::runtime_error);
    }
}

TEST_CASE("round trip through build reproduces the input edge multiset") {
    const GraphStore g = toy_graph();
    std::vector<Edge> seen;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (std::uint32_t r = 0; r < g.degree(v); ++r)
            seen.emplace_back(v, g.neighbor_at(v, r));
    CHECK(seen == toy_edges);  // toy input is already source-sorted
}

}  // TEST_SUITE

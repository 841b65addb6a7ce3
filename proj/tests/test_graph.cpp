#include <map>
#include <set>
#include <sstream>

#include "doctest.h"

#include "regspec/error.hpp"
#include "regspec/graph.hpp"
#include "regspec/rng.hpp"

using namespace regspec;

namespace {

bool is_error(ErrorKind want, auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == want;
    }
    return false;
}

// Depth of every vertex from the root by BFS.
std::vector<std::size_t> depths(const Graph& g, Vertex root) {
    std::vector<std::size_t> depth(g.size(), SIZE_MAX);
    std::vector<Vertex> queue{root};
    depth[root] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto w : g.neighbors(queue[i])) {
            if (depth[w] == SIZE_MAX) {
                depth[w] = depth[queue[i]] + 1;
                queue.push_back(w);
            }
        }
    }
    return depth;
}

} // namespace

TEST_CASE("graph validation rejects loops, duplicates and asymmetry") {
    CHECK(is_error(ErrorKind::InvariantViolation, [] { Graph::from_edges(3, {{0, 0}}); }));
    CHECK(is_error(ErrorKind::InvariantViolation, [] { Graph::from_edges(3, {{0, 1}, {1, 0}}); }));
    CHECK(is_error(ErrorKind::InvariantViolation, [] { Graph::from_adjacency({{1}, {}}); }));
    const Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK_FALSE(g.degree().has_value());
}

TEST_CASE("small fixtures") {
    const Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degree() == 3U);
    const Graph c6 = cycle_graph(6);
    CHECK(c6.degree() == 2U);
    CHECK(c6.has_edge(0, 5));
    const Graph u = disjoint_union(cycle_graph(3), cycle_graph(4));
    CHECK(u.size() == 7);
    CHECK(u.edge_count() == 7);
    CHECK(u.has_edge(3, 6));
}

TEST_CASE("tree labeling") {
    CHECK(build_tree({3, 0, TreeKind::AlmostRegular}).size() == 1);
    CHECK(build_tree({3, 0, TreeKind::AlmostRegular}).edge_count() == 0);

    const Graph star = build_tree({3, 1, TreeKind::AlmostRegular});
    CHECK(star.edges() == std::vector<Edge>{{0, 2}, {1, 2}});

    const TreeShape reg{3, 2, TreeKind::Regular};
    const Graph t = build_tree(reg);
    CHECK(t.size() == 10);
    CHECK(t.edge_count() == 9);
    CHECK(t.degree_of(9) == 3);
    std::size_t leaves = 0;
    for (Vertex v = 0; v < 10; ++v) {
        leaves += t.degree_of(v) == 1 ? 1 : 0;
    }
    CHECK(leaves == 6);

    for (auto kind : {TreeKind::AlmostRegular, TreeKind::Regular}) {
        for (std::size_t d : {3, 4, 5}) {
            for (std::size_t zeta = 1; zeta <= 4; ++zeta) {
                const TreeShape shape{d, zeta, kind};
                const Graph g = build_tree(shape);
                CHECK(g.size() == shape.vertex_count());
                CHECK(g.edge_count() + 1 == g.size());
                const auto depth = depths(g, static_cast<Vertex>(g.size() - 1));
                std::vector<Vertex> at_bottom;
                for (Vertex v = 0; v < g.size(); ++v) {
                    REQUIRE(depth[v] != SIZE_MAX);
                    if (depth[v] == zeta) {
                        at_bottom.push_back(v);
                    }
                }
                CHECK(tree_leaves(shape) == at_bottom);
                // Each subtree occupies a contiguous block ending in its own root.
                const auto& kids = g.neighbors(static_cast<Vertex>(g.size() - 1));
                const std::size_t block = (g.size() - 1) / kids.size();
                for (std::size_t c = 0; c < kids.size(); ++c) {
                    CHECK(kids[c] == (c + 1) * block - 1);
                }
            }
        }
    }
    CHECK(is_error(ErrorKind::Capacity, [] { build_tree({50, 8, TreeKind::Regular}); }));
}

TEST_CASE("seeded streams are reproducible and independent") {
    SeededRng a(7, 0), b(7, 0), c(7, 1);
    bool differs = false;
    for (int i = 0; i < 16; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        differs = differs || x != c.next_u64();
    }
    CHECK(differs);
    SeededRng r(1, 2);
    std::vector<std::size_t> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        hits[r.uniform_index(5)]++;
    }
    for (auto h : hits) {
        CHECK(h > 850);
        CHECK(h < 1150);
    }
}

TEST_CASE("regular sampler") {
    SeededRng rng(3, 0);
    CHECK(sample_regular(4, 3, rng) == complete_graph(4));

    const Graph g6 = sample_regular(6, 2, rng);
    CHECK(g6.degree() == 2U);

    for (std::size_t d : {3, 4, 9, 12}) {
        const Graph g = sample_regular(200, d, rng);
        CHECK(g.size() == 200);
        CHECK(g.degree() == d);
        CHECK(g.edge_count() == 100 * d);
    }
    CHECK(is_error(ErrorKind::InvalidParameter, [&] { sample_regular(5, 3, rng); }));
    CHECK(is_error(ErrorKind::InvalidParameter, [&] { sample_regular(4, 4, rng); }));

    SeededRng r1(7, 0), r2(7, 0);
    CHECK(sample_regular(1000, 4, r1) == sample_regular(1000, 4, r2));
}

TEST_CASE("sampler hits every labeled 2-regular graph on 5 vertices") {
    // The 12 labeled 5-cycles are the only simple 2-regular graphs on 5 vertices.
    SeededRng rng(11, 0);
    std::map<std::vector<Edge>, int> seen;
    for (int i = 0; i < 2400; ++i) {
        seen[sample_regular(5, 2, rng).edges()]++;
    }
    CHECK(seen.size() == 12);
    for (const auto& [edges, count] : seen) {
        CHECK(count > 120);
        CHECK(count < 280);
    }
}

TEST_CASE("edge-list round trip and parse errors") {
    std::ostringstream os;
    write_edgelist(complete_graph(4), os);
    CHECK(os.str() == "# n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

    std::ostringstream empty;
    write_edgelist(Graph::from_edges(3, {}), empty);
    CHECK(empty.str() == "# n=3\n");

    SeededRng rng(7, 0);
    const Graph g = sample_regular(1000, 4, rng);
    std::stringstream ss;
    write_edgelist(g, ss);
    CHECK(read_edgelist(ss) == g);

    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edgelist(in);
    };
    CHECK(is_error(ErrorKind::Parse, [&] { parse("0 1\n"); }));
    CHECK(is_error(ErrorKind::Parse, [&] { parse("# n=3\n0 x\n"); }));
    CHECK(is_error(ErrorKind::Parse, [&] { parse("# n=3\n2 1\n"); }));
    CHECK(is_error(ErrorKind::InvariantViolation, [&] { parse("# n=3\n1 1\n"); }));
    CHECK(is_error(ErrorKind::InvariantViolation, [&] { parse("# n=3\n0 1\n0 1\n"); }));
    CHECK(parse("# n=3\n# comment\n0 2\n").edge_count() == 1);
}

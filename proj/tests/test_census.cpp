#include "doctest.h"

#include "oracles.hpp"
#include "regspec/census.hpp"
#include "regspec/error.hpp"
#include "regspec/rng.hpp"

using namespace regspec;

namespace {

// Every simple graph on n <= 5 vertices, plus assorted 6..8 vertex fixtures.
std::vector<Graph> fixtures() {
    std::vector<Graph> out;
    for (std::size_t n = 3; n <= 5; ++n) {
        std::vector<Edge> all;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                all.push_back({u, v});
            }
        }
        for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (mask & (1U << i)) {
                    chosen.push_back(all[i]);
                }
            }
            out.push_back(Graph::from_edges(n, chosen));
        }
    }
    for (std::size_t n = 6; n <= 8; ++n) {
        out.push_back(complete_graph(n));
        out.push_back(cycle_graph(n));
    }
    out.push_back(disjoint_union(complete_graph(4), cycle_graph(4)));
    out.push_back(build_tree({3, 2, TreeKind::AlmostRegular}));
    return out;
}

} // namespace

TEST_CASE("cycle counts against subset enumeration") {
    const auto k4 = count_cycles(complete_graph(4), 4);
    CHECK(k4.count(3) == 4);
    CHECK(k4.count(4) == 3);
    const auto c8 = count_cycles(cycle_graph(8), 8);
    for (std::size_t s = 3; s < 8; ++s) {
        CHECK(c8.count(s) == 0);
    }
    CHECK(c8.count(8) == 1);

    for (const auto& g : fixtures()) {
        const auto want = oracle::subset_cycle_counts(g, g.size());
        const auto got = count_cycles(g, g.size());
        for (std::size_t s = 3; s <= g.size(); ++s) {
            CHECK(got.count(s) == want[s]);
        }
    }
    SeededRng rng(21, 0);
    for (int i = 0; i < 10; ++i) {
        const Graph g = sample_regular(8, 3 + (i % 2), rng);
        const auto want = oracle::subset_cycle_counts(g, 8);
        const auto got = count_cycles(g, 8);
        for (std::size_t s = 3; s <= 8; ++s) {
            CHECK(got.count(s) == want[s]);
        }
    }
    CHECK_THROWS_AS(count_cycles(complete_graph(12), 12, 1000), Error);
    CHECK(expected_cycle_count(3, 4) == doctest::Approx(4.5));
}

TEST_CASE("neighborhoods") {
    const auto c10_2 = acyclic_ball_census(cycle_graph(10), 2);
    CHECK(c10_2.acyclic_vertices.size() == 10);
    const auto c10_5 = acyclic_ball_census(cycle_graph(10), 5);
    CHECK(c10_5.acyclic_vertices.empty());
    CHECK(c10_5.fraction == 0.0);
    // A 4-cycle closes inside the radius-2 neighborhood; for a 5-cycle the
    // closing edge joins two depth-2 vertices and is not on any walk of length 2.
    CHECK_FALSE(ball_is_acyclic(cycle_graph(4), 0, 2));
    CHECK(ball_is_acyclic(cycle_graph(5), 0, 2));

    const auto ball = neighborhood_ball(cycle_graph(10), 0, 2);
    CHECK(ball.vertices.size() == 5);
    CHECK(ball.edge_count == 4);
    CHECK(ball.vertices[0] == 0);

    SeededRng rng(8, 0);
    const Graph g = sample_regular(1000, 4, rng);
    const auto census = acyclic_ball_census(g, 2);
    CHECK(census.fraction >= 0.9);
    std::size_t acyclic = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        const bool cyc = oracle::ball_has_cycle(g, v, 2);
        acyclic += cyc ? 0 : 1;
        CHECK(ball_is_acyclic(g, v, 2) == !cyc);
    }
    CHECK(acyclic == census.acyclic_vertices.size());

    const auto ib = induced_ball(g, 17, 2);
    CHECK(ib.original[0] == 17);
    CHECK(ib.distance[0] == 0);
}

TEST_CASE("zeta schedule") {
    const double d = 5.0;
    const double n = std::pow(d - 1.0, 4.0 * (2.0 + 1.0));
    CHECK(zeta_schedule(n, d, 2.0) == doctest::Approx(1.0));
    CHECK(zeta_schedule(1e6, 8, 4.0) == doctest::Approx(0.25 * std::log(1e6) / std::log(7.0) - 4.0));
    CHECK(zeta_radius(1e6, 8, 4.0) == 1);
    CHECK(zeta_radius(1e6, 8, 0.0) == 1);
}

TEST_CASE("N*_r bound") {
    const Graph forest = build_tree({3, 3, TreeKind::Regular});
    const auto fc = count_cycles(forest, 4);
    CHECK(nr_star_bound(fc, 3, 2) == 0.0);
    CHECK(acyclic_ball_census(forest, 2).acyclic_vertices.size() == forest.size());

    const auto k4 = count_cycles(complete_graph(4), 4);
    // 2*3*sqrt(2)*4 + 2*4*1*3
    CHECK(nr_star_bound(k4, 3, 2) == doctest::Approx(24.0 * std::sqrt(2.0) + 24.0));
    CHECK(nr_star_bound(k4, 3, 2) >= 4.0 - acyclic_ball_census(complete_graph(4), 2).acyclic_vertices.size());
    CHECK_THROWS_AS(nr_star_bound(count_cycles(complete_graph(4), 3), 3, 2), Error);

    SeededRng rng(12, 0);
    for (int i = 0; i < 10; ++i) {
        const Graph g = sample_regular(1000, 4, rng);
        const double bound = nr_star_bound(count_cycles(g, 4), 4, 2);
        CHECK(1000.0 - acyclic_ball_census(g, 2).acyclic_vertices.size() <= bound);
    }
}

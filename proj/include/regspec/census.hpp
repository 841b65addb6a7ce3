#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "regspec/graph.hpp"

namespace regspec {

// Counts of simple cycles by length, each cycle counted once.
struct CycleCensus {
    std::size_t s_max = 0;
    std::vector<std::uint64_t> counts; // counts[s] for 0 <= s <= s_max; entries below 3 are 0
    std::optional<std::size_t> d;      // degree used for expected counts, when known

    std::uint64_t count(std::size_t s) const { return s < counts.size() ? counts[s] : 0; }
    // mu_s = (d-1)^s / (2s)
    double expected(std::size_t s) const;
};

inline constexpr std::size_t kMaxCycleLength = 12;
inline constexpr std::uint64_t kDefaultCycleBudget = 4'000'000'000ULL;

// Exact cycle counts for 3 <= s <= s_max. A cycle is enumerated from its
// smallest vertex in the direction whose second vertex is smaller than its
// last, so each of its 2s traversals is collapsed to one.
CycleCensus count_cycles(const Graph& g, std::size_t s_max,
                         std::uint64_t step_budget = kDefaultCycleBudget);

double expected_cycle_count(std::size_t s, std::size_t d);

// The r-neighborhood of v: vertices within distance r of v plus every edge on
// a walk of length <= r from v (every edge with an endpoint at distance < r).
struct Ball {
    std::vector<Vertex> vertices; // vertices[0] is the center
    std::vector<std::uint32_t> distance;
    std::size_t edge_count = 0;

    bool acyclic() const { return edge_count + 1 == vertices.size(); }
};

Ball neighborhood_ball(const Graph& g, Vertex v, std::size_t r);
bool ball_is_acyclic(const Graph& g, Vertex v, std::size_t r);

// Subgraph induced on the vertices within distance `radius` of `center`,
// relabeled so that `center` maps to local vertex 0.
struct InducedBall {
    Graph graph;
    std::vector<Vertex> original; // local id -> original id
    std::vector<std::uint32_t> distance;
};

InducedBall induced_ball(const Graph& g, Vertex center, std::size_t radius);

struct NeighborhoodCensus {
    std::size_t radius = 0;
    std::size_t n = 0;
    std::vector<Vertex> acyclic_vertices;
    double fraction = 0.0;
};

NeighborhoodCensus acyclic_ball_census(const Graph& g, std::size_t r);

// zeta_n = (1/4) log n / log(d - 1) - beta, unclamped.
double zeta_schedule(double n, double d, double beta);
// floor(zeta_schedule), clamped to at least 1.
std::size_t zeta_radius(double n, double d, double beta);

// N*_r = sum_{s=3}^{2r} 2 s (d-1)^{(2r-s)/2} M_s; upper bound on the number of
// vertices whose r-neighborhood contains a cycle.
double nr_star_bound(const CycleCensus& census, std::size_t d, std::size_t r);

} // namespace regspec

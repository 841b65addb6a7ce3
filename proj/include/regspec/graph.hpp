#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "regspec/rng.hpp"

namespace regspec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph. Neighbor lists are sorted; the uniform
// degree is recorded when every vertex has the same degree.
class Graph {
public:
    Graph() = default;

    // Validates symmetry and simplicity; throws InvariantViolation otherwise.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);
    // Edges may appear in either orientation; duplicates and loops are rejected.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::optional<std::size_t> degree() const { return degree_; }
    std::size_t degree_of(Vertex v) const { return adj_[v].size(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    // Canonical edge list: (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    explicit Graph(std::vector<std::vector<Vertex>> adj);

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    std::optional<std::size_t> degree_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph disjoint_union(const Graph& a, const Graph& b);

enum class TreeKind { AlmostRegular, Regular };

// Rooted tree descriptor. AlmostRegular: every vertex has d-1 children.
// Regular: the root has d children, every other internal vertex d-1.
struct TreeShape {
    std::size_t d = 3;
    std::size_t zeta = 0;
    TreeKind kind = TreeKind::AlmostRegular;

    std::size_t vertex_count() const;
};

inline constexpr std::size_t kDefaultTreeCap = 10'000'000;

// Recursive left-to-right block labeling: the subtrees hanging off the root
// occupy contiguous index blocks, each labeled the same way, and the root is
// the last vertex (index n - 1).
Graph build_tree(const TreeShape& shape, std::size_t max_vertices = kDefaultTreeCap);

// Vertex indices of the leaves (depth zeta) of the labeled tree, ascending.
std::vector<Vertex> tree_leaves(const TreeShape& shape);

struct SamplerOptions {
    // Pairing model with whole restarts up to this degree, swap repair above.
    std::size_t rejection_max_degree = 8;
    std::size_t max_restarts = 100'000;
    // Randomizing swaps after repair, as a multiple of |E|.
    std::size_t mixing_swaps_per_edge = 10;
    // Repair budget, as a multiple of |E|.
    std::size_t repair_swaps_per_edge = 1000;
};

// Random simple d-regular graph on n vertices. Exactly uniform for
// d <= rejection_max_degree; approximately uniform (swap chain) above.
Graph sample_regular(std::size_t n, std::size_t d, SeededRng& rng,
                     const SamplerOptions& options = {});

// Edge-list format: "# n=<n>" header, then one "u v" line per edge with u < v.
// Other '#' lines are comments.
void write_edgelist(const Graph& g, std::ostream& out);
Graph read_edgelist(std::istream& in);

} // namespace regspec

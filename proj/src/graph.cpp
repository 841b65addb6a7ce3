#include "regspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "regspec/error.hpp"

namespace regspec {

Graph::Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
    const std::size_t n = adj_.size();
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = adj_[i];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            throw Error(ErrorKind::InvariantViolation,
                        "duplicate neighbor at vertex " + std::to_string(i));
        }
        for (Vertex j : row) {
            if (j >= n) {
                throw Error(ErrorKind::InvariantViolation,
                            "neighbor " + std::to_string(j) + " out of range");
            }
            if (j == i) {
                throw Error(ErrorKind::InvariantViolation,
                            "self-loop at vertex " + std::to_string(i));
            }
        }
        degree_sum += row.size();
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex j : adj_[i]) {
            if (!std::binary_search(adj_[j].begin(), adj_[j].end(), static_cast<Vertex>(i))) {
                throw Error(ErrorKind::InvariantViolation,
                            "asymmetric edge " + std::to_string(i) + "->" + std::to_string(j));
            }
        }
    }
    edge_count_ = degree_sum / 2;
    if (n > 0) {
        const std::size_t d0 = adj_[0].size();
        bool regular = std::all_of(adj_.begin(), adj_.end(),
                                   [d0](const auto& row) { return row.size() == d0; });
        if (regular) {
            degree_ = d0;
        }
    }
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
    return Graph(std::move(adj));
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorKind::InvariantViolation,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
        }
        adj[u].push_back(v);
        if (u != v) {
            adj[v].push_back(u);
        }
    }
    return Graph(std::move(adj));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const auto offset = static_cast<Vertex>(a.size());
    for (auto [u, v] : b.edges()) {
        edges.emplace_back(u + offset, v + offset);
    }
    return Graph::from_edges(a.size() + b.size(), edges);
}

// ---------------------------------------------------------------------------
// Trees

namespace {

std::size_t almost_regular_count(std::size_t d, std::size_t zeta) {
    // sum_{i=0}^{zeta} (d-1)^i, saturating
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t i = 0; i <= zeta; ++i) {
        total += layer;
        if (total > SIZE_MAX / 4 || layer > SIZE_MAX / (d + 1)) {
            return SIZE_MAX;
        }
        layer *= (d - 1);
    }
    return total;
}

// Lays out an almost-regular subtree of the given depth starting at `offset`;
// returns the root index (offset + size - 1).
Vertex layout_almost(std::size_t d, std::size_t depth, Vertex offset, std::vector<Edge>& edges,
                     std::vector<Vertex>* leaves) {
    if (depth == 0) {
        if (leaves) {
            leaves->push_back(offset);
        }
        return offset;
    }
    std::vector<Vertex> children;
    Vertex next = offset;
    for (std::size_t c = 0; c + 1 < d; ++c) {
        Vertex child = layout_almost(d, depth - 1, next, edges, leaves);
        children.push_back(child);
        next = child + 1;
    }
    const Vertex root = next;
    for (Vertex child : children) {
        edges.emplace_back(child, root);
    }
    return root;
}

void check_shape(const TreeShape& shape) {
    if (shape.d < 2) {
        throw Error(ErrorKind::InvalidParameter, "tree degree must be >= 2");
    }
}

} // namespace

std::size_t TreeShape::vertex_count() const {
    if (kind == TreeKind::AlmostRegular) {
        return almost_regular_count(d, zeta);
    }
    if (zeta == 0) {
        return 1;
    }
    const std::size_t sub = almost_regular_count(d, zeta - 1);
    if (sub == SIZE_MAX || sub > (SIZE_MAX - 1) / d) {
        return SIZE_MAX;
    }
    return 1 + d * sub;
}

namespace {

Graph build_tree_impl(const TreeShape& shape, std::size_t max_vertices,
                      std::vector<Vertex>* leaves) {
    check_shape(shape);
    const std::size_t n = shape.vertex_count();
    if (n > max_vertices) {
        throw Error(ErrorKind::Capacity, "tree with d=" + std::to_string(shape.d) +
                                             ", depth=" + std::to_string(shape.zeta) +
                                             " exceeds " + std::to_string(max_vertices) +
                                             " vertices");
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    if (shape.kind == TreeKind::AlmostRegular || shape.zeta == 0) {
        layout_almost(shape.d, shape.zeta, 0, edges, leaves);
    } else {
        std::vector<Vertex> children;
        Vertex next = 0;
        for (std::size_t c = 0; c < shape.d; ++c) {
            Vertex child = layout_almost(shape.d, shape.zeta - 1, next, edges, leaves);
            children.push_back(child);
            next = child + 1;
        }
        for (Vertex child : children) {
            edges.emplace_back(child, next);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace

Graph build_tree(const TreeShape& shape, std::size_t max_vertices) {
    return build_tree_impl(shape, max_vertices, nullptr);
}

std::vector<Vertex> tree_leaves(const TreeShape& shape) {
    std::vector<Vertex> leaves;
    build_tree_impl(shape, kDefaultTreeCap, &leaves);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}

// ---------------------------------------------------------------------------
// Random regular graphs

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
    if (a > b) {
        std::swap(a, b);
    }
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<Edge> random_pairing(std::size_t n, std::size_t d, SeededRng& rng) {
    std::vector<Vertex> stubs;
    stubs.reserve(n * d);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < d; ++k) {
            stubs.push_back(v);
        }
    }
    rng.shuffle(std::span<Vertex>(stubs));
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    return edges;
}

bool pairing_is_simple(const std::vector<Edge>& edges) {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) {
            return false;
        }
        keys.push_back(edge_key(a, b));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

// Multigraph edge list with multiplicity bookkeeping for double-edge swaps.
class SwapState {
public:
    explicit SwapState(std::vector<Edge> edges) : edges_(std::move(edges)) {
        multiplicity_.reserve(edges_.size() * 2);
        for (auto [a, b] : edges_) {
            ++multiplicity_[edge_key(a, b)];
        }
    }

    bool is_bad(std::size_t i) const {
        auto [a, b] = edges_[i];
        return a == b || multiplicity_.at(edge_key(a, b)) > 1;
    }

    // Replaces edges i=(a,b), j=(c,d) by (a,c),(b,d) or (a,d),(b,c) when the
    // result introduces no loop and no repeated edge.
    bool try_swap(std::size_t i, std::size_t j, bool cross) {
        if (i == j) {
            return false;
        }
        auto [a, b] = edges_[i];
        auto [c, d] = edges_[j];
        if (cross) {
            std::swap(c, d);
        }
        const Edge e1{a, c};
        const Edge e2{b, d};
        if (e1.first == e1.second || e2.first == e2.second) {
            return false;
        }
        const auto k1 = edge_key(e1.first, e1.second);
        const auto k2 = edge_key(e2.first, e2.second);
        if (k1 == k2) {
            return false;
        }
        remove(edge_key(a, b));
        remove(edge_key(c, d));
        if (count(k1) > 0 || count(k2) > 0) {
            ++multiplicity_[edge_key(a, b)];
            ++multiplicity_[edge_key(c, d)];
            return false;
        }
        ++multiplicity_[k1];
        ++multiplicity_[k2];
        edges_[i] = e1;
        edges_[j] = e2;
        return true;
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t count(std::uint64_t key) const {
        auto it = multiplicity_.find(key);
        return it == multiplicity_.end() ? 0 : it->second;
    }
    void remove(std::uint64_t key) {
        auto it = multiplicity_.find(key);
        if (--it->second == 0) {
            multiplicity_.erase(it);
        }
    }

    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> multiplicity_;
};

Graph sample_by_swaps(std::size_t n, std::size_t d, SeededRng& rng,
                      const SamplerOptions& options) {
    SwapState state(random_pairing(n, d, rng));
    const std::size_t m = state.edges().size();
    std::size_t budget = options.repair_swaps_per_edge * m;

    while (true) {
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < m; ++i) {
            if (state.is_bad(i)) {
                bad.push_back(i);
            }
        }
        if (bad.empty()) {
            break;
        }
        for (std::size_t i : bad) {
            while (state.is_bad(i)) {
                if (budget == 0) {
                    throw Error(ErrorKind::Sampling, "swap repair budget exhausted");
                }
                --budget;
                const std::size_t j = rng.uniform_index(m);
                const bool cross = rng.uniform_index(2) == 1;
                state.try_swap(i, j, cross);
            }
        }
    }

    const std::size_t mixing = options.mixing_swaps_per_edge * m;
    for (std::size_t t = 0; t < mixing; ++t) {
        const std::size_t i = rng.uniform_index(m);
        const std::size_t j = rng.uniform_index(m);
        const bool cross = rng.uniform_index(2) == 1;
        state.try_swap(i, j, cross);
    }
    return Graph::from_edges(n, state.edges());
}

} // namespace

Graph sample_regular(std::size_t n, std::size_t d, SeededRng& rng, const SamplerOptions& options) {
    if (n == 0 || d == 0) {
        throw Error(ErrorKind::InvalidParameter, "n and d must be positive");
    }
    if ((n * d) % 2 != 0) {
        throw Error(ErrorKind::InvalidParameter, "n*d must be even");
    }
    if (d >= n) {
        throw Error(ErrorKind::InvalidParameter, "d must be smaller than n");
    }
    if (n > UINT32_MAX) {
        throw Error(ErrorKind::Capacity, "vertex count exceeds 32-bit ids");
    }
    if (d > options.rejection_max_degree) {
        return sample_by_swaps(n, d, rng, options);
    }
    for (std::size_t attempt = 0; attempt < options.max_restarts; ++attempt) {
        auto edges = random_pairing(n, d, rng);
        if (pairing_is_simple(edges)) {
            return Graph::from_edges(n, edges);
        }
    }
    throw Error(ErrorKind::Sampling, "pairing model restarts exhausted");
}

// ---------------------------------------------------------------------------
// Edge-list I/O

void write_edgelist(const Graph& g, std::ostream& out) {
    out << "# n=" << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph read_edgelist(std::istream& in) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& msg) {
        return Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        if (line[line.find_first_not_of(" \t")] == '#') {
            auto pos = line.find("n=");
            if (!n && pos != std::string::npos) {
                try {
                    std::size_t used = 0;
                    n = std::stoull(line.substr(pos + 2), &used);
                } catch (const std::exception&) {
                    throw fail("malformed header");
                }
            }
            continue;
        }
        std::istringstream fields(line);
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra)) {
            throw fail("expected \"u v\"");
        }
        if (u < 0 || v < 0) {
            throw fail("negative vertex id");
        }
        if (u == v) {
            throw Error(ErrorKind::InvariantViolation,
                        "line " + std::to_string(line_no) + ": self-loop");
        }
        if (u > v) {
            throw fail("expected u < v");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!n) {
        throw Error(ErrorKind::Parse, "missing \"# n=<count>\" header");
    }
    return Graph::from_edges(*n, edges);
}

} // namespace regspec

#include "regspec/census.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regspec/error.hpp"

namespace regspec {

double expected_cycle_count(std::size_t s, std::size_t d) {
    if (s == 0 || d == 0) {
        return 0.0;
    }
    return std::pow(static_cast<double>(d) - 1.0, static_cast<double>(s)) /
           (2.0 * static_cast<double>(s));
}

double CycleCensus::expected(std::size_t s) const {
    if (!d) {
        throw Error(ErrorKind::MissingData, "expected cycle counts need a degree");
    }
    return expected_cycle_count(s, *d);
}

namespace {

class CycleWalker {
public:
    CycleWalker(const Graph& g, std::size_t s_max, std::uint64_t budget)
        : g_(g), s_max_(s_max), budget_(budget), on_path_(g.size(), 0), counts_(s_max + 1, 0) {}

    std::vector<std::uint64_t> run() {
        for (Vertex start = 0; start < g_.size(); ++start) {
            start_ = start;
            path_.assign(1, start);
            on_path_[start] = 1;
            extend(start);
            on_path_[start] = 0;
        }
        return std::move(counts_);
    }

private:
    void extend(Vertex u) {
        for (Vertex v : g_.neighbors(u)) {
            if (++steps_ > budget_) {
                throw Error(ErrorKind::Capacity, "cycle enumeration exceeded its step budget");
            }
            if (v == start_) {
                const std::size_t len = path_.size();
                if (len >= 3 && path_[1] < path_.back()) {
                    ++counts_[len];
                }
                continue;
            }
            if (v < start_ || on_path_[v] || path_.size() >= s_max_) {
                continue;
            }
            on_path_[v] = 1;
            path_.push_back(v);
            extend(v);
            path_.pop_back();
            on_path_[v] = 0;
        }
    }

    const Graph& g_;
    std::size_t s_max_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    Vertex start_ = 0;
    std::vector<Vertex> path_;
    std::vector<char> on_path_;
    std::vector<std::uint64_t> counts_;
};

} // namespace

CycleCensus count_cycles(const Graph& g, std::size_t s_max, std::uint64_t step_budget) {
    if (s_max < 3 || s_max > kMaxCycleLength) {
        throw Error(ErrorKind::InvalidParameter,
                    "s_max must lie in [3, " + std::to_string(kMaxCycleLength) + "]");
    }
    CycleCensus census;
    census.s_max = s_max;
    census.d = g.degree();
    census.counts = CycleWalker(g, s_max, step_budget).run();
    return census;
}

Ball neighborhood_ball(const Graph& g, Vertex v, std::size_t r) {
    Ball ball;
    std::vector<std::int64_t> local(g.size(), -1);
    ball.vertices.push_back(v);
    ball.distance.push_back(0);
    local[v] = 0;
    for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
        const Vertex u = ball.vertices[head];
        const std::uint32_t du = ball.distance[head];
        if (du >= r) {
            continue;
        }
        for (Vertex w : g.neighbors(u)) {
            if (local[w] < 0) {
                local[w] = static_cast<std::int64_t>(ball.vertices.size());
                ball.vertices.push_back(w);
                ball.distance.push_back(du + 1);
            }
        }
    }
    // Each edge with an endpoint at distance < r, counted once.
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        if (ball.distance[i] >= r) {
            continue;
        }
        for (Vertex w : g.neighbors(ball.vertices[i])) {
            const auto j = static_cast<std::size_t>(local[w]);
            if (ball.distance[j] >= r || i < j) {
                ++ball.edge_count;
            }
        }
    }
    return ball;
}

bool ball_is_acyclic(const Graph& g, Vertex v, std::size_t r) {
    return neighborhood_ball(g, v, r).acyclic();
}

InducedBall induced_ball(const Graph& g, Vertex center, std::size_t radius) {
    InducedBall out;
    std::vector<std::int64_t> local(g.size(), -1);
    out.original.push_back(center);
    out.distance.push_back(0);
    local[center] = 0;
    for (std::size_t head = 0; head < out.original.size(); ++head) {
        const Vertex u = out.original[head];
        if (out.distance[head] >= radius) {
            continue;
        }
        for (Vertex w : g.neighbors(u)) {
            if (local[w] < 0) {
                local[w] = static_cast<std::int64_t>(out.original.size());
                out.original.push_back(w);
                out.distance.push_back(out.distance[head] + 1);
            }
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        for (Vertex w : g.neighbors(out.original[i])) {
            const auto j = local[w];
            if (j > static_cast<std::int64_t>(i)) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    out.graph = Graph::from_edges(out.original.size(), edges);
    return out;
}

NeighborhoodCensus acyclic_ball_census(const Graph& g, std::size_t r) {
    if (r < 1) {
        throw Error(ErrorKind::InvalidParameter, "neighborhood radius must be >= 1");
    }
    NeighborhoodCensus census;
    census.radius = r;
    census.n = g.size();
    for (Vertex v = 0; v < g.size(); ++v) {
        if (ball_is_acyclic(g, v, r)) {
            census.acyclic_vertices.push_back(v);
        }
    }
    census.fraction = g.size() == 0 ? 0.0
                                    : static_cast<double>(census.acyclic_vertices.size()) /
                                          static_cast<double>(g.size());
    return census;
}

double zeta_schedule(double n, double d, double beta) {
    if (d < 3.0 || n < 2.0) {
        throw Error(ErrorKind::InvalidParameter, "zeta schedule needs d >= 3 and n >= 2");
    }
    return 0.25 * std::log(n) / std::log(d - 1.0) - beta;
}

std::size_t zeta_radius(double n, double d, double beta) {
    const double z = std::floor(zeta_schedule(n, d, beta));
    return z < 1.0 ? 1 : static_cast<std::size_t>(z);
}

double nr_star_bound(const CycleCensus& census, std::size_t d, std::size_t r) {
    if (census.s_max < 2 * r) {
        throw Error(ErrorKind::MissingData, "cycle census stops at s=" +
                                                std::to_string(census.s_max) + ", need s=" +
                                                std::to_string(2 * r));
    }
    const double dm1 = static_cast<double>(d) - 1.0;
    double total = 0.0;
    for (std::size_t s = 3; s <= 2 * r; ++s) {
        const double spread = (2.0 * static_cast<double>(r) - static_cast<double>(s)) / 2.0;
        total += 2.0 * static_cast<double>(s) * std::pow(dm1, spread) *
                 static_cast<double>(census.count(s));
    }
    return total;
}

} // namespace regspec

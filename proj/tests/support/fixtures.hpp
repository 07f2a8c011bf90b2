#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "pdiv/gen.hpp"
#include "pdiv/graph.hpp"
#include "pdiv/plane.hpp"

namespace pdiv::fixtures {

inline WeightedGraph graph(std::size_t n, std::vector<Edge> edges) {
    return WeightedGraph::build(n, std::move(edges));
}

inline PlaneGraph plane(std::vector<Point> coords, std::vector<Edge> edges) {
    const std::size_t n = coords.size();
    return rotation_from_coordinates(WeightedGraph::build(n, std::move(edges)), std::move(coords));
}

/// s=0, u1=1, t=2, u2=3 on the unit square.
inline PlaneGraph four_cycle(double w = 1.0) {
    return plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, w}, {1, 2, w}, {2, 3, w}, {3, 0, w}});
}

inline PlaneGraph triangle(double w = 1.0) {
    return plane({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, w}, {1, 2, w}, {0, 2, w}});
}

/// Vertex r*N + c at (c, r); horizontal edges first, then vertical.
inline PlaneGraph unit_grid(std::size_t N, double w = 1.0) {
    std::vector<Point> coords;
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) coords.push_back({double(c), double(r)});
    }
    const auto id = [N](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * N + c); };
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c + 1 < N; ++c) edges.push_back({id(r, c), id(r, c + 1), w});
    }
    for (std::size_t r = 0; r + 1 < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) edges.push_back({id(r, c), id(r + 1, c), w});
    }
    return plane(std::move(coords), std::move(edges));
}

/// Connected graph on n vertices: a random spanning tree plus each other pair
/// with probability `density`. Weights uniform in [lo, hi).
inline WeightedGraph random_connected(SplitMix64& rng, std::size_t n, double density,
                                      double lo = 0.0, double hi = 1000.0) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 1; v < n; ++v) {
        const auto u = static_cast<VertexId>(rng.below(v));
        pairs.insert({u, v});
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng.uniform() < density) pairs.insert({u, v});
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, rng.uniform(lo, hi)});
    return WeightedGraph::build(n, std::move(edges));
}

/// Same with small integer weights so that ties are common.
inline WeightedGraph random_tied(SplitMix64& rng, std::size_t n, double density) {
    WeightedGraph g = random_connected(rng, n, density);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.w = double(rng.below(3));
    return WeightedGraph::build(n, std::move(edges));
}

}  // namespace pdiv::fixtures

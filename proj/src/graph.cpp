#include "pdiv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace pdiv {

WeightedGraph WeightedGraph::build(std::size_t n, std::vector<Edge> edges) {
    if (n >= kNoVertex || edges.size() >= kNoEdge) {
        throw std::invalid_argument("graph too large for 32-bit ids");
    }
    std::vector<std::size_t> degree(n + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= n || e.v >= n) {
            throw GraphError(GraphError::Kind::vertex_out_of_range, i,
                             fmt::format("edge #{} ({},{}): vertex out of range (n={})", i, e.u,
                                         e.v, n));
        }
        if (e.u == e.v) {
            throw GraphError(GraphError::Kind::self_loop, i,
                             fmt::format("edge #{} ({},{}): self-loop", i, e.u, e.v));
        }
        if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
            throw GraphError(GraphError::Kind::negative_weight, i,
                             fmt::format("edge #{} ({},{}): weight {} is negative or not finite",
                                         i, e.u, e.v, e.w));
        }
        ++degree[e.u + 1];
        ++degree[e.v + 1];
    }

    WeightedGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v + 1];
    g.adjacency_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto id = static_cast<EdgeId>(i);
        g.adjacency_[fill[edges[i].u]++] = {edges[i].v, id};
        g.adjacency_[fill[edges[i].v]++] = {edges[i].u, id};
    }

    // Parallel edges show up as a repeated neighbour in some adjacency list.
    std::vector<EdgeId> seen(n, kNoEdge);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = g.offsets_[v]; k < g.offsets_[v + 1]; ++k) {
            const Neighbor& nb = g.adjacency_[k];
            if (seen[nb.vertex] != kNoEdge) {
                const EdgeId dup = std::max(seen[nb.vertex], nb.edge);
                throw GraphError(GraphError::Kind::parallel_edge, dup,
                                 fmt::format("edge #{} ({},{}): parallel to edge #{}", dup,
                                             edges[dup].u, edges[dup].v,
                                             std::min(seen[nb.vertex], nb.edge)));
            }
            seen[nb.vertex] = nb.edge;
        }
        for (std::size_t k = g.offsets_[v]; k < g.offsets_[v + 1]; ++k) {
            seen[g.adjacency_[k].vertex] = kNoEdge;
        }
    }
    g.edges_ = std::move(edges);
    return g;
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId u, VertexId v) const {
    for (const Neighbor& nb : neighbors(u)) {
        if (nb.vertex == v) return nb.edge;
    }
    return std::nullopt;
}

double path_weight(const WeightedGraph& g, std::span<const EdgeId> edges) {
    double total = 0.0;
    for (EdgeId e : edges) total += g.weight(e);
    return total;
}

double edge_set_weight(const WeightedGraph& g, std::span<const EdgeId> edges) {
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    return path_weight(g, sorted);
}

Path path_from_vertices(const WeightedGraph& g, std::vector<VertexId> vertices) {
    Path p;
    p.edges.reserve(vertices.empty() ? 0 : vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto e = g.find_edge(vertices[i], vertices[i + 1]);
        if (!e) {
            throw std::invalid_argument(
                fmt::format("vertices {} and {} are not adjacent", vertices[i], vertices[i + 1]));
        }
        p.edges.push_back(*e);
    }
    p.vertices = std::move(vertices);
    p.total_weight = path_weight(g, p.edges);
    return p;
}

std::string check_path(const WeightedGraph& g, const Path& p) {
    if (p.vertices.empty()) return "path has no vertices";
    if (p.edges.size() + 1 != p.vertices.size()) {
        return fmt::format("{} vertices but {} edges", p.vertices.size(), p.edges.size());
    }
    std::vector<VertexId> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return "path repeats a vertex";
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i] >= g.edge_count()) return fmt::format("edge id {} out of range", p.edges[i]);
        const Edge& e = g.edge(p.edges[i]);
        const bool ok = (e.u == p.vertices[i] && e.v == p.vertices[i + 1]) ||
                        (e.v == p.vertices[i] && e.u == p.vertices[i + 1]);
        if (!ok) return fmt::format("edge {} does not join path vertices {} and {}", p.edges[i],
                                    p.vertices[i], p.vertices[i + 1]);
    }
    const double expect = path_weight(g, p.edges);
    if (std::abs(expect - p.total_weight) > 1e-9 * std::max(1.0, std::abs(expect))) {
        return fmt::format("stored weight {} differs from edge sum {}", p.total_weight, expect);
    }
    return {};
}

std::optional<Path> bfs_path(const WeightedGraph& g, VertexId s, VertexId t,
                             std::optional<EdgeId> forbidden) {
    const std::size_t n = g.vertex_count();
    std::vector<EdgeId> via(n, kNoEdge);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> queue;
    queue.reserve(n);
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
        const VertexId v = queue[head];
        for (const Neighbor& nb : g.neighbors(v)) {
            if (seen[nb.vertex] || (forbidden && nb.edge == *forbidden)) continue;
            seen[nb.vertex] = 1;
            via[nb.vertex] = nb.edge;
            queue.push_back(nb.vertex);
        }
    }
    if (!seen[t]) return std::nullopt;

    Path p;
    for (VertexId v = t; v != s; v = g.edge(via[v]).other(v)) {
        p.vertices.push_back(v);
        p.edges.push_back(via[v]);
    }
    p.vertices.push_back(s);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    p.total_weight = path_weight(g, p.edges);
    return p;
}

std::vector<std::uint8_t> reachable_from(const WeightedGraph& g, VertexId source,
                                         std::span<const std::uint8_t> removed) {
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : g.neighbors(v)) {
            if (seen[nb.vertex] || (!removed.empty() && removed[nb.edge])) continue;
            seen[nb.vertex] = 1;
            stack.push_back(nb.vertex);
        }
    }
    return seen;
}

bool connected(const WeightedGraph& g, VertexId s, VertexId t) {
    return reachable_from(g, s)[t] != 0;
}

bool is_connected(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return true;
    const auto seen = reachable_from(g, 0);
    return std::all_of(seen.begin(), seen.end(), [](std::uint8_t x) { return x != 0; });
}

}  // namespace pdiv

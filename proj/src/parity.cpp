#include "pdiv/parity.hpp"

#include <stdexcept>

namespace pdiv {

SubdividedGraph subdivide_except(std::size_t n, std::span<const MarkedEdge> edges) {
    std::size_t unmarked = 0;
    for (const MarkedEdge& e : edges) unmarked += e.marked ? 0 : 1;

    SubdividedGraph out;
    out.source_vertex_count = n;
    std::vector<Edge> list;
    list.reserve(edges.size() + unmarked);
    out.origin.reserve(edges.size() + unmarked);
    auto next_vertex = static_cast<VertexId>(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const MarkedEdge& e = edges[i];
        const auto id = static_cast<EdgeId>(i);
        if (e.marked) {
            list.push_back({e.u, e.v, e.w});
            out.origin.push_back(id);
        } else {
            const VertexId mid = next_vertex++;
            const double half = e.w / 2;
            list.push_back({e.u, mid, half});
            list.push_back({mid, e.v, half});
            out.origin.push_back(id);
            out.origin.push_back(id);
        }
    }
    out.graph = WeightedGraph::build(next_vertex, std::move(list));
    return out;
}

SubdividedGraph subdivide_except(const WeightedGraph& g, std::span<const std::uint8_t> in_f) {
    if (in_f.size() != g.edge_count()) throw std::invalid_argument("F mask size mismatch");
    std::vector<MarkedEdge> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& x = g.edge(e);
        edges.push_back({x.u, x.v, x.w, in_f[e] != 0});
    }
    return subdivide_except(g.vertex_count(), edges);
}

std::optional<SourcePath> shortest_path_odd_in_f(std::size_t n, std::span<const MarkedEdge> edges,
                                                 VertexId s, VertexId t, TrackerKind tracker,
                                                 OddPathStats* stats) {
    const SubdividedGraph sub = subdivide_except(n, edges);
    auto found = shortest_odd_path(sub.graph, s, t, tracker, stats);
    if (!found) return std::nullopt;

    SourcePath p;
    for (VertexId v : found->vertices) {
        if (sub.is_source_vertex(v)) p.vertices.push_back(v);
    }
    for (EdgeId e : found->edges) {
        const EdgeId src = sub.origin[e];
        if (p.edges.empty() || p.edges.back() != src) p.edges.push_back(src);
    }
    std::size_t marked = 0;
    for (EdgeId e : p.edges) {
        p.total_weight += edges[e].w;
        marked += edges[e].marked ? 1 : 0;
    }
    if (marked % 2 != 1 || p.edges.size() + 1 != p.vertices.size()) {
        throw std::logic_error("projected path does not use an odd number of marked edges");
    }
    return p;
}

std::optional<Path> shortest_path_odd_in_f(const WeightedGraph& g,
                                           std::span<const std::uint8_t> in_f, VertexId s,
                                           VertexId t, TrackerKind tracker) {
    if (in_f.size() != g.edge_count()) throw std::invalid_argument("F mask size mismatch");
    std::vector<MarkedEdge> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& x = g.edge(e);
        edges.push_back({x.u, x.v, x.w, in_f[e] != 0});
    }
    auto found = shortest_path_odd_in_f(g.vertex_count(), edges, s, t, tracker);
    if (!found) return std::nullopt;
    Path p;
    p.vertices = std::move(found->vertices);
    p.edges = std::move(found->edges);
    p.total_weight = path_weight(g, p.edges);
    return p;
}

std::optional<Path> detour_path(const WeightedGraph& g, VertexId s, VertexId t, EdgeId b,
                                TrackerKind tracker) {
    if (b >= g.edge_count()) throw std::invalid_argument("detour edge out of range");
    std::vector<std::uint8_t> in_f(g.edge_count(), 0);
    in_f[b] = 1;
    return shortest_path_odd_in_f(g, in_f, s, t, tracker);
}

}  // namespace pdiv

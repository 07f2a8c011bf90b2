#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdiv/graph.hpp"
#include "pdiv/odd_path.hpp"

namespace pdiv {

/// Edge of a possibly non-simple source graph, tagged with membership in F.
/// A marked and an unmarked edge may join the same pair of vertices.
struct MarkedEdge {
    VertexId u;
    VertexId v;
    double w;
    bool marked;
};

/// Source graph with every edge outside F split in two halves of weight w/2
/// through a fresh vertex. Fresh vertices are numbered after the source ones.
struct SubdividedGraph {
    WeightedGraph graph;
    std::vector<EdgeId> origin;  // subdivided edge -> source edge
    std::size_t source_vertex_count = 0;

    bool is_source_vertex(VertexId v) const noexcept { return v < source_vertex_count; }
};

/// Throws GraphError if two edges of the same mark class are parallel.
SubdividedGraph subdivide_except(std::size_t n, std::span<const MarkedEdge> edges);

/// `in_f` holds one flag per edge of g.
SubdividedGraph subdivide_except(const WeightedGraph& g, std::span<const std::uint8_t> in_f);

/// Path of the source graph described by vertex ids and source edge indices.
struct SourcePath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    double total_weight = 0.0;
};

/// Cheapest simple s-t path using an odd number of marked edges.
std::optional<SourcePath> shortest_path_odd_in_f(std::size_t n, std::span<const MarkedEdge> edges,
                                                 VertexId s, VertexId t,
                                                 TrackerKind tracker = TrackerKind::union_find,
                                                 OddPathStats* stats = nullptr);

/// Same, for a simple graph with F given as per-edge flags; the result's
/// edges are ids of g.
std::optional<Path> shortest_path_odd_in_f(const WeightedGraph& g,
                                           std::span<const std::uint8_t> in_f, VertexId s,
                                           VertexId t,
                                           TrackerKind tracker = TrackerKind::union_find);

/// Cheapest simple s-t path that passes through edge b.
std::optional<Path> detour_path(const WeightedGraph& g, VertexId s, VertexId t, EdgeId b,
                                TrackerKind tracker = TrackerKind::union_find);

}  // namespace pdiv

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdiv {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Edge {
    VertexId u;
    VertexId v;
    double w;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

struct Neighbor {
    VertexId vertex;
    EdgeId edge;
};

class GraphError : public std::invalid_argument {
public:
    enum class Kind { self_loop, parallel_edge, negative_weight, vertex_out_of_range };

    GraphError(Kind kind, std::size_t edge_index, const std::string& what)
        : std::invalid_argument(what), kind_(kind), edge_index_(edge_index) {}

    Kind kind() const noexcept { return kind_; }
    /// Position of the offending entry in the input edge list.
    std::size_t edge_index() const noexcept { return edge_index_; }

private:
    Kind kind_;
    std::size_t edge_index_;
};

/// Simple undirected graph with non-negative finite weights. Adjacency is
/// stored in CSR form and never changes after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and builds. Throws GraphError naming the first bad edge.
    static WeightedGraph build(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    double weight(EdgeId e) const { return edges_[e].w; }

    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Edge joining u and v, if any. Linear in deg(u).
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
};

struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    double total_weight = 0.0;

    std::size_t length() const noexcept { return edges.size(); }
};

/// Sum of edge weights taken in path order.
double path_weight(const WeightedGraph& g, std::span<const EdgeId> edges);

/// Sum of edge weights taken in ascending edge-id order. Used wherever two
/// independent computations must agree bit-for-bit on the cost of an edge set.
double edge_set_weight(const WeightedGraph& g, std::span<const EdgeId> edges);

/// Builds a Path from a vertex sequence, resolving each consecutive pair to
/// its edge. Throws std::invalid_argument if a pair is not adjacent.
Path path_from_vertices(const WeightedGraph& g, std::vector<VertexId> vertices);

/// Checks simplicity, edge/vertex consistency and the stored weight.
/// Returns an empty string when valid, otherwise a description of the defect.
std::string check_path(const WeightedGraph& g, const Path& p);

/// Any simple s-t path avoiding `forbidden`, found by BFS.
std::optional<Path> bfs_path(const WeightedGraph& g, VertexId s, VertexId t,
                             std::optional<EdgeId> forbidden = std::nullopt);

bool connected(const WeightedGraph& g, VertexId s, VertexId t);

/// Per-vertex 0/1 flags marking what `source` reaches without using any edge
/// e with removed[e] != 0. An empty mask removes nothing.
std::vector<std::uint8_t> reachable_from(const WeightedGraph& g, VertexId source,
                                         std::span<const std::uint8_t> removed = {});

bool is_connected(const WeightedGraph& g);

}  // namespace pdiv

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdiv/graph.hpp"

namespace pdiv {

using FaceId = std::uint32_t;

struct Point {
    double x;
    double y;

    friend bool operator==(const Point&, const Point&) = default;
};

class PlaneError : public std::invalid_argument {
public:
    enum class Kind {
        coincident_points,
        disconnected_graph,
        euler_check_failed,
        too_many_edges,
        bad_rotation,
        crossing_edges
    };

    PlaneError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A dart is a directed copy of an edge: dart 2e runs edge(e).u -> edge(e).v,
/// dart 2e+1 runs the other way.
using DartId = std::uint32_t;

inline DartId dart_of(EdgeId e, bool reversed) noexcept { return 2 * e + (reversed ? 1 : 0); }
inline EdgeId edge_of(DartId d) noexcept { return d >> 1; }
inline DartId twin(DartId d) noexcept { return d ^ 1U; }

/// Connected weighted graph with straight-line coordinates and, at every
/// vertex, the outgoing darts in counter-clockwise order.
class PlaneGraph {
public:
    PlaneGraph() = default;

    const WeightedGraph& graph() const noexcept { return graph_; }
    std::span<const Point> coords() const noexcept { return coords_; }

    /// Outgoing darts at v, counter-clockwise.
    std::span<const DartId> rotation(VertexId v) const {
        return {rotation_.data() + offsets_[v], rotation_.data() + offsets_[v + 1]};
    }

    VertexId tail(DartId d) const {
        const Edge& e = graph_.edge(edge_of(d));
        return (d & 1U) ? e.v : e.u;
    }
    VertexId head(DartId d) const {
        const Edge& e = graph_.edge(edge_of(d));
        return (d & 1U) ? e.u : e.v;
    }

    /// Dart following d around its face: at head(d), the dart after twin(d)
    /// in counter-clockwise order.
    DartId face_successor(DartId d) const {
        const DartId back = twin(d);
        const VertexId v = tail(back);
        const std::size_t begin = offsets_[v];
        const std::size_t deg = offsets_[v + 1] - begin;
        return rotation_[begin + (position_[back] + 1) % deg];
    }

    friend PlaneGraph rotation_from_coordinates(WeightedGraph graph, std::vector<Point> coords);

private:
    WeightedGraph graph_;
    std::vector<Point> coords_;
    std::vector<std::size_t> offsets_;
    std::vector<DartId> rotation_;
    std::vector<std::uint32_t> position_;  // index of each dart in its tail's rotation
};

/// Sorts each vertex's incident edges by angle from the positive x-axis,
/// counter-clockwise; collinear neighbours are ordered by distance.
/// Throws PlaneError on coincident points or a disconnected graph.
PlaneGraph rotation_from_coordinates(WeightedGraph graph, std::vector<Point> coords);

/// Exact segment-intersection test over all edge pairs. Quadratic; meant for
/// small or untrusted inputs. Throws PlaneError(crossing_edges).
void verify_straight_line_embedding(const PlaneGraph& pg);

struct FaceMap {
    std::size_t face_count = 0;
    std::vector<FaceId> face_of_dart;                  // indexed by DartId
    std::vector<std::pair<FaceId, FaceId>> side_faces;  // indexed by EdgeId: (face of 2e, face of 2e+1)
    std::vector<std::uint32_t> face_size;               // darts on each face boundary
};

/// Walks every face boundary once. Throws PlaneError(euler_check_failed) when
/// V - E + F != 2, or PlaneError(too_many_edges) when m > 3n - 6.
FaceMap trace_faces(const PlaneGraph& pg);

struct DualEdge {
    FaceId a;
    FaceId b;
    double w;
    EdgeId primal;  // cheapest primal edge among merged parallels
    bool marked;
};

/// Faces-as-vertices graph. Self-loop candidates (primal bridges) are
/// dropped. Parallel candidates are merged, keeping the cheapest, but only
/// within the same mark class, so a marked and an unmarked edge may join the
/// same pair of faces. Without marks the result is a simple graph.
struct DualGraph {
    std::size_t face_count = 0;
    std::size_t candidate_count = 0;  // primal edges considered before merging
    std::vector<DualEdge> edges;
    std::vector<EdgeId> primal_to_dual;                // kNoEdge when dropped or merged away
    std::vector<std::pair<FaceId, FaceId>> side_faces;  // indexed by primal EdgeId

    std::optional<EdgeId> dual_of(EdgeId primal) const {
        const EdgeId d = primal_to_dual[primal];
        return d == kNoEdge ? std::nullopt : std::optional<EdgeId>(d);
    }
    EdgeId primal_of(EdgeId dual) const { return edges[dual].primal; }

    /// The dual as a simple graph. Throws if a marked/unmarked parallel pair exists.
    WeightedGraph as_graph() const;
};

/// Blanket-merge dual: every parallel class keeps its cheapest edge.
DualGraph compute_dual(const PlaneGraph& pg);

/// Dual from an existing face map. `marked` (empty or one flag per primal
/// edge) selects the parity class of each candidate; `excluded` is omitted
/// entirely.
DualGraph compute_dual(const WeightedGraph& primal, const FaceMap& faces,
                       std::span<const std::uint8_t> marked = {},
                       std::optional<EdgeId> excluded = std::nullopt);

}  // namespace pdiv

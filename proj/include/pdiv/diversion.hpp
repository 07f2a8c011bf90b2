#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdiv/graph.hpp"
#include "pdiv/odd_path.hpp"
#include "pdiv/plane.hpp"

namespace pdiv {

/// s, t, the edge b that must become an s-t bridge, and an optional budget k
/// on the total weight of removed edges.
struct DiversionQuery {
    VertexId s = 0;
    VertexId t = 0;
    EdgeId b = 0;
    std::optional<double> budget;
};

enum class DiversionStatus { optimal, already_bridge, infeasible };

std::string_view to_string(DiversionStatus status) noexcept;

struct DiversionSolution {
    DiversionStatus status = DiversionStatus::infeasible;
    /// F, ascending edge ids. b is never part of it.
    std::vector<EdgeId> removed;
    /// Sum of w(F) in ascending edge-id order.
    double cost = 0.0;
    /// Witness dual cycle as primal edge ids: b first, then the dual path
    /// from one side face of b back to the other.
    std::vector<EdgeId> dual_cycle;
    /// Faces visited by the dual path, starting and ending at the two side
    /// faces of b.
    std::vector<FaceId> cycle_faces;
    std::optional<bool> within_budget;
};

class DiversionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveTimings {
    double dual_ms = 0.0;
    double oddpath_ms = 0.0;
};

/// Solves diversion queries on one plane graph. The face structure is traced
/// once in the constructor and shared by every query; solve() is const and
/// safe to call concurrently.
class DiversionSolver {
public:
    explicit DiversionSolver(const PlaneGraph& pg);

    const PlaneGraph& plane_graph() const noexcept { return *pg_; }
    const FaceMap& faces() const noexcept { return faces_; }

    /// `reference`, when given, replaces the BFS reference path; it must be a
    /// simple s-t path avoiding b. Throws DiversionError if the result fails
    /// its own validation.
    DiversionSolution solve(const DiversionQuery& q, TrackerKind tracker = TrackerKind::union_find,
                            const Path* reference = nullptr, SolveTimings* timings = nullptr,
                            OddPathStats* stats = nullptr) const;

private:
    const PlaneGraph* pg_;
    FaceMap faces_;
};

DiversionSolution solve(const PlaneGraph& pg, const DiversionQuery& q,
                        TrackerKind tracker = TrackerKind::union_find);

struct ValidationReport {
    bool ok = false;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Independent check of an optimal or already-bridge answer: s and t are
/// connected in G - F, separated in G - F - b, and every edge of F + b runs
/// between the two resulting components (so no proper subset separates).
/// When `faces` is given, the witness cycle is checked as well.
ValidationReport validate_solution(const WeightedGraph& g, const DiversionQuery& q,
                                   const DiversionSolution& sol, const FaceMap* faces = nullptr);

}  // namespace pdiv

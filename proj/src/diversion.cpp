#include "pdiv/diversion.hpp"

#include <algorithm>
#include <chrono>
#include <fmt/format.h>

#include "pdiv/parity.hpp"

namespace pdiv {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_query(const WeightedGraph& g, const DiversionQuery& q) {
    if (q.s >= g.vertex_count() || q.t >= g.vertex_count()) {
        throw std::invalid_argument(fmt::format("terminal out of range (n={})", g.vertex_count()));
    }
    if (q.s == q.t) throw std::invalid_argument("s and t must differ");
    if (q.b >= g.edge_count()) {
        throw std::invalid_argument(fmt::format("edge b={} out of range (m={})", q.b, g.edge_count()));
    }
    if (q.budget && !(*q.budget >= 0.0)) throw std::invalid_argument("budget must be non-negative");
}

}  // namespace

std::string_view to_string(DiversionStatus status) noexcept {
    switch (status) {
        case DiversionStatus::optimal: return "optimal";
        case DiversionStatus::already_bridge: return "already-bridge";
        case DiversionStatus::infeasible: return "infeasible";
    }
    return "infeasible";
}

DiversionSolver::DiversionSolver(const PlaneGraph& pg) : pg_(&pg), faces_(trace_faces(pg)) {}

DiversionSolution DiversionSolver::solve(const DiversionQuery& q, TrackerKind tracker,
                                         const Path* reference, SolveTimings* timings,
                                         OddPathStats* stats) const {
    const WeightedGraph& g = pg_->graph();
    check_query(g, q);
    DiversionSolution sol;

    if (!connected(g, q.s, q.t)) return sol;

    std::optional<Path> found;
    if (reference) {
        const std::string defect = check_path(g, *reference);
        if (!defect.empty() || reference->vertices.front() != q.s ||
            reference->vertices.back() != q.t ||
            std::find(reference->edges.begin(), reference->edges.end(), q.b) !=
                reference->edges.end()) {
            throw std::invalid_argument("reference path must be a simple s-t path avoiding b");
        }
    } else {
        found = bfs_path(g, q.s, q.t, q.b);
        if (!found) {
            sol.status = DiversionStatus::already_bridge;
            sol.dual_cycle = {q.b};
            if (q.budget) sol.within_budget = true;
            return sol;
        }
        reference = &*found;
    }

    const auto [u, v] = faces_.side_faces[q.b];
    if (u == v) return sol;  // b is a bridge lying off every s-t path

    auto start = Clock::now();
    std::vector<std::uint8_t> on_path(g.edge_count(), 0);
    for (EdgeId e : reference->edges) on_path[e] = 1;
    const DualGraph dual = compute_dual(g, faces_, on_path, q.b);
    std::vector<MarkedEdge> candidates;
    candidates.reserve(dual.edges.size());
    for (const DualEdge& d : dual.edges) candidates.push_back({d.a, d.b, d.w, d.marked});
    if (timings) timings->dual_ms += millis_since(start);

    start = Clock::now();
    auto cycle = shortest_path_odd_in_f(dual.face_count, candidates, u, v, tracker, stats);
    if (timings) timings->oddpath_ms += millis_since(start);
    if (!cycle) return sol;

    sol.status = DiversionStatus::optimal;
    sol.cycle_faces = std::move(cycle->vertices);
    sol.dual_cycle.push_back(q.b);
    std::size_t crossings = 0;
    for (EdgeId d : cycle->edges) {
        const EdgeId e = dual.primal_of(d);
        sol.dual_cycle.push_back(e);
        sol.removed.push_back(e);
        crossings += on_path[e];
    }
    std::sort(sol.removed.begin(), sol.removed.end());
    sol.cost = edge_set_weight(g, sol.removed);
    if (q.budget) sol.within_budget = sol.cost <= *q.budget;

    if (crossings % 2 != 1) {
        throw DiversionError("witness cycle crosses the reference path an even number of times");
    }
    if (auto report = validate_solution(g, q, sol, &faces_); !report) {
        throw DiversionError("solution failed validation: " + report.diagnostic);
    }
    return sol;
}

DiversionSolution solve(const PlaneGraph& pg, const DiversionQuery& q, TrackerKind tracker) {
    return DiversionSolver(pg).solve(q, tracker);
}

ValidationReport validate_solution(const WeightedGraph& g, const DiversionQuery& q,
                                   const DiversionSolution& sol, const FaceMap* faces) {
    auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
    if (sol.status == DiversionStatus::infeasible) return fail("infeasible answer carries no removal set");
    if (sol.status == DiversionStatus::already_bridge && !sol.removed.empty()) {
        return fail("already-bridge answer must remove nothing");
    }

    std::vector<std::uint8_t> removed(g.edge_count(), 0);
    for (EdgeId e : sol.removed) {
        if (e >= g.edge_count()) return fail(fmt::format("removed edge {} out of range", e));
        if (e == q.b) return fail("b itself is in the removal set");
        if (removed[e]) return fail(fmt::format("edge {} removed twice", e));
        removed[e] = 1;
    }
    if (edge_set_weight(g, sol.removed) != sol.cost) {
        return fail(fmt::format("reported cost {} differs from w(F) = {}", sol.cost,
                                edge_set_weight(g, sol.removed)));
    }

    if (!reachable_from(g, q.s, removed)[q.t]) return fail("s and t are disconnected in G - F");
    removed[q.b] = 1;
    const auto side_s = reachable_from(g, q.s, removed);
    if (side_s[q.t]) return fail("an s-t path avoids b in G - F");
    const auto side_t = reachable_from(g, q.t, removed);

    // Restoring any single cut edge must reconnect s and t.
    auto crosses = [&](EdgeId e) {
        const Edge& x = g.edge(e);
        return (side_s[x.u] && side_t[x.v]) || (side_s[x.v] && side_t[x.u]);
    };
    if (!crosses(q.b)) return fail("b does not join the s side to the t side");
    for (EdgeId e : sol.removed) {
        if (!crosses(e)) return fail(fmt::format("F + b is not minimal: edge {} is redundant", e));
    }

    if (faces && sol.status == DiversionStatus::optimal) {
        const auto& cf = sol.cycle_faces;
        if (sol.dual_cycle.size() != sol.removed.size() + 1 || cf.size() != sol.dual_cycle.size()) {
            return fail("witness cycle has the wrong length");
        }
        if (sol.dual_cycle.front() != q.b) return fail("witness cycle must start with b");
        const auto [u, v] = faces->side_faces[q.b];
        if (cf.front() != u || cf.back() != v) return fail("witness cycle does not close through b");
        std::vector<FaceId> sorted = cf;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return fail("witness cycle repeats a face");
        }
        for (std::size_t i = 1; i < cf.size(); ++i) {
            const auto [a, b] = faces->side_faces[sol.dual_cycle[i]];
            const bool joins = (a == cf[i - 1] && b == cf[i]) || (b == cf[i - 1] && a == cf[i]);
            if (!joins) return fail(fmt::format("cycle edge {} does not join its faces", i));
        }
    }
    return {true, {}};
}

}  // namespace pdiv

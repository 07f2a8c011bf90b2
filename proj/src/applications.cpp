#include "pdiv/applications.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace pdiv {

DiverseCutsReport diverse_cuts(const PlaneGraph& pg, VertexId s, VertexId t, TrackerKind tracker) {
    const WeightedGraph& g = pg.graph();
    const DiversionSolver solver(pg);
    DiverseCutsReport report;
    report.per_edge.reserve(g.edge_count());

    std::map<std::vector<EdgeId>, std::size_t> index;
    for (EdgeId b = 0; b < g.edge_count(); ++b) {
        report.per_edge.push_back(solver.solve({s, t, b, std::nullopt}, tracker));
        const DiversionSolution& sol = report.per_edge.back();
        if (sol.status == DiversionStatus::infeasible) continue;
        ++report.feasible_edges;

        std::vector<EdgeId> cut = sol.removed;
        cut.insert(std::upper_bound(cut.begin(), cut.end(), b), b);
        auto [it, fresh] = index.try_emplace(cut, report.unique_cuts.size());
        if (fresh) {
            UniqueCut uc;
            uc.weight = edge_set_weight(g, cut);
            uc.edges = std::move(cut);
            report.unique_cuts.push_back(std::move(uc));
        }
        UniqueCut& uc = report.unique_cuts[it->second];
        ++uc.multiplicity;
        uc.generators.push_back(b);
    }
    std::sort(report.unique_cuts.begin(), report.unique_cuts.end(),
              [](const UniqueCut& a, const UniqueCut& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.edges < b.edges;
              });
    return report;
}

namespace {

class Dinic {
public:
    explicit Dinic(const WeightedGraph& g) : g_(g), level_(g.vertex_count()), it_(g.vertex_count()) {
        residual_.reserve(2 * g.edge_count());
        double top = 0.0;
        for (const Edge& e : g.edges()) {
            residual_.push_back(e.w);  // u -> v
            residual_.push_back(e.w);  // v -> u
            top = std::max(top, e.w);
        }
        eps_ = top * 1e-12;
    }

    void run(VertexId s, VertexId t) {
        while (levels(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (push(s, t, std::numeric_limits<double>::infinity()) > eps_) {
            }
        }
    }

    // Vertices reachable from s through arcs with residual capacity.
    std::vector<std::uint8_t> source_side(VertexId s) {
        levels(s, kNoVertex);
        std::vector<std::uint8_t> side(g_.vertex_count(), 0);
        for (std::size_t v = 0; v < side.size(); ++v) side[v] = level_[v] >= 0;
        return side;
    }

private:
    // Arc index of edge e leaving `from`.
    std::size_t arc(EdgeId e, VertexId from) const { return 2 * e + (g_.edge(e).u == from ? 0 : 1); }

    bool levels(VertexId s, VertexId t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<VertexId> queue{s};
        level_[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const VertexId v = queue[h];
            for (const Neighbor& nb : g_.neighbors(v)) {
                if (level_[nb.vertex] < 0 && residual_[arc(nb.edge, v)] > eps_) {
                    level_[nb.vertex] = level_[v] + 1;
                    queue.push_back(nb.vertex);
                }
            }
        }
        return t != kNoVertex && level_[t] >= 0;
    }

    double push(VertexId v, VertexId t, double limit) {
        if (v == t) return limit;
        const auto nbs = g_.neighbors(v);
        for (std::size_t& i = it_[v]; i < nbs.size(); ++i) {
            const Neighbor& nb = nbs[i];
            const std::size_t a = arc(nb.edge, v);
            if (level_[nb.vertex] != level_[v] + 1 || residual_[a] <= eps_) continue;
            const double got = push(nb.vertex, t, std::min(limit, residual_[a]));
            if (got > eps_) {
                residual_[a] -= got;
                residual_[a ^ 1U] += got;
                return got;
            }
        }
        return 0.0;
    }

    const WeightedGraph& g_;
    std::vector<double> residual_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
    double eps_ = 0.0;
};

}  // namespace

std::vector<EdgeId> min_cut_edges(const WeightedGraph& g, VertexId s, VertexId t) {
    if (s == t) throw std::invalid_argument("s and t must differ");
    Dinic flow(g);
    flow.run(s, t);
    const auto side = flow.source_side(s);
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (side[g.edge(e).u] != side[g.edge(e).v]) cut.push_back(e);
    }
    return cut;
}

double min_cut_weight(const WeightedGraph& g, VertexId s, VertexId t) {
    return edge_set_weight(g, min_cut_edges(g, s, t));
}

}  // namespace pdiv

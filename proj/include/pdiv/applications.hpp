#pragma once

#include <cstddef>
#include <vector>

#include "pdiv/diversion.hpp"

namespace pdiv {

struct UniqueCut {
    std::vector<EdgeId> edges;  // F + b, ascending
    double weight = 0.0;        // summed in ascending edge-id order
    std::size_t multiplicity = 0;
    std::vector<EdgeId> generators;  // every b that produced this cut
};

struct DiverseCutsReport {
    std::vector<DiversionSolution> per_edge;  // indexed by b
    std::vector<UniqueCut> unique_cuts;       // by weight, then edge list
    std::size_t feasible_edges = 0;
};

/// Runs diversion once for every edge as b and collects the distinct
/// minimal s-t cuts F + b. One face traversal is shared by all runs.
DiverseCutsReport diverse_cuts(const PlaneGraph& pg, VertexId s, VertexId t,
                               TrackerKind tracker = TrackerKind::union_find);

/// Minimum s-t cut weight by Dinic's max-flow on the primal graph. The
/// returned value is the ascending-id sum over the edges of the cut found,
/// not the accumulated flow, so it compares exactly with other cut sums.
double min_cut_weight(const WeightedGraph& g, VertexId s, VertexId t);

/// Edge set of the minimum cut behind min_cut_weight (source side = vertices
/// reachable in the final residual graph).
std::vector<EdgeId> min_cut_edges(const WeightedGraph& g, VertexId s, VertexId t);

}  // namespace pdiv

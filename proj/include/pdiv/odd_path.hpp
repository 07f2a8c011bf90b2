#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pdiv/graph.hpp"

namespace pdiv {

enum class Parity { odd, even };

enum class TrackerKind { naive, union_find };

std::string_view to_string(TrackerKind kind) noexcept;
std::optional<TrackerKind> parse_tracker(std::string_view text) noexcept;

/// Blossom base bookkeeping with eager rewriting. Each representative keeps
/// an intrusive list of the vertices that point at it, so re-basing u touches
/// exactly the vertices whose base is u.
class NaiveBaseTracker {
public:
    explicit NaiveBaseTracker(std::size_t n);

    VertexId base(VertexId v) const { return base_[v]; }
    void set_base(std::span<const VertexId> members, VertexId new_base);

private:
    void append(VertexId rep, VertexId v);

    std::vector<VertexId> base_;
    std::vector<VertexId> head_;
    std::vector<VertexId> tail_;
    std::vector<VertexId> next_;
};

/// Blossom base bookkeeping as a union-find forest: set_base only links,
/// base() resolves the chain and compresses it.
class UnionFindBaseTracker {
public:
    explicit UnionFindBaseTracker(std::size_t n);

    VertexId base(VertexId v);
    void set_base(std::span<const VertexId> members, VertexId new_base);

private:
    std::vector<VertexId> parent_;
};

/// Doubled graph used by the search: vertex v of the input appears as 2v
/// (original copy) and 2v+1 (mirror copy), joined by a zero-weight matched
/// edge. The mirror of s is always deleted; for odd parity the mirror of t is
/// deleted and 2t is the target, for even parity 2t is deleted and 2t+1 is the
/// target. Neighbourhoods are derived from the input graph on the fly.
class MirrorGraph {
public:
    MirrorGraph(const WeightedGraph& g, VertexId s, VertexId t, Parity parity);

    const WeightedGraph& original() const noexcept { return *g_; }
    /// Id space size (2n); two ids in that space are deleted.
    std::size_t id_count() const noexcept { return 2 * g_->vertex_count(); }
    std::size_t vertex_count() const noexcept { return id_count() - 2; }

    static VertexId original_of(VertexId x) noexcept { return x >> 1; }
    static VertexId copy_of(VertexId v, bool mirror) noexcept { return 2 * v + (mirror ? 1 : 0); }

    bool deleted(VertexId x) const noexcept { return x == deleted_[0] || x == deleted_[1]; }
    VertexId root() const noexcept { return copy_of(s_, false); }
    VertexId target() const noexcept { return target_; }

    /// Partner under the initial matching, or kNoVertex for root and target.
    VertexId mate(VertexId x) const noexcept {
        const VertexId v = original_of(x);
        return (v == s_ || v == t_) ? kNoVertex : (x ^ 1U);
    }

    /// Calls f(neighbor, weight, original edge) for every unmatched edge at x.
    template <class F>
    void for_each_unmatched(VertexId x, F&& f) const {
        const VertexId side = x & 1U;
        for (const Neighbor& nb : g_->neighbors(original_of(x))) {
            const VertexId y = 2 * nb.vertex + side;
            if (!deleted(y)) f(y, g_->weight(nb.edge), nb.edge);
        }
    }

private:
    const WeightedGraph* g_;
    VertexId s_;
    VertexId t_;
    VertexId target_;
    VertexId deleted_[2];
};

struct OddPathStats {
    std::size_t events = 0;
    std::size_t grown = 0;
    std::size_t blossoms = 0;
};

/// Cheapest simple s-t path whose edge count has the requested parity, or
/// nullopt when none exists. Weights must be non-negative.
std::optional<Path> shortest_parity_path(const WeightedGraph& g, VertexId s, VertexId t,
                                         Parity parity,
                                         TrackerKind tracker = TrackerKind::union_find,
                                         OddPathStats* stats = nullptr);

inline std::optional<Path> shortest_odd_path(const WeightedGraph& g, VertexId s, VertexId t,
                                             TrackerKind tracker = TrackerKind::union_find,
                                             OddPathStats* stats = nullptr) {
    return shortest_parity_path(g, s, t, Parity::odd, tracker, stats);
}

inline std::optional<Path> shortest_even_path(const WeightedGraph& g, VertexId s, VertexId t,
                                              TrackerKind tracker = TrackerKind::union_find,
                                              OddPathStats* stats = nullptr) {
    return shortest_parity_path(g, s, t, Parity::even, tracker, stats);
}

}  // namespace pdiv

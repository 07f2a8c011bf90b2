#include "pdiv/odd_path.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pdiv {

std::string_view to_string(TrackerKind kind) noexcept {
    return kind == TrackerKind::naive ? "naive" : "unionfind";
}

std::optional<TrackerKind> parse_tracker(std::string_view text) noexcept {
    if (text == "naive") return TrackerKind::naive;
    if (text == "unionfind" || text == "union-find" || text == "union_find") {
        return TrackerKind::union_find;
    }
    return std::nullopt;
}

NaiveBaseTracker::NaiveBaseTracker(std::size_t n)
    : base_(n), head_(n, kNoVertex), tail_(n, kNoVertex), next_(n, kNoVertex) {
    for (std::size_t v = 0; v < n; ++v) base_[v] = static_cast<VertexId>(v);
}

void NaiveBaseTracker::append(VertexId rep, VertexId v) {
    next_[v] = kNoVertex;
    if (head_[rep] == kNoVertex) {
        head_[rep] = v;
    } else {
        next_[tail_[rep]] = v;
    }
    tail_[rep] = v;
}

void NaiveBaseTracker::set_base(std::span<const VertexId> members, VertexId new_base) {
    for (VertexId u : members) {
        if (u == new_base) continue;
        if (head_[u] != kNoVertex) {
            for (VertexId v = head_[u]; v != kNoVertex; v = next_[v]) base_[v] = new_base;
            if (head_[new_base] == kNoVertex) {
                head_[new_base] = head_[u];
            } else {
                next_[tail_[new_base]] = head_[u];
            }
            tail_[new_base] = tail_[u];
            head_[u] = tail_[u] = kNoVertex;
        }
        base_[u] = new_base;
        append(new_base, u);
    }
}

UnionFindBaseTracker::UnionFindBaseTracker(std::size_t n) : parent_(n) {
    for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<VertexId>(v);
}

VertexId UnionFindBaseTracker::base(VertexId v) {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        const VertexId up = parent_[v];
        parent_[v] = root;
        v = up;
    }
    return root;
}

void UnionFindBaseTracker::set_base(std::span<const VertexId> members, VertexId new_base) {
    for (VertexId u : members) parent_[u] = new_base;
}

MirrorGraph::MirrorGraph(const WeightedGraph& g, VertexId s, VertexId t, Parity parity)
    : g_(&g), s_(s), t_(t) {
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
        throw std::invalid_argument("terminal out of range");
    }
    if (s == t) throw std::invalid_argument("s and t must differ");
    deleted_[0] = copy_of(s, true);
    if (parity == Parity::odd) {
        deleted_[1] = copy_of(t, true);
        target_ = copy_of(t, false);
    } else {
        deleted_[1] = copy_of(t, false);
        target_ = copy_of(t, true);
    }
}

namespace {

// Single augmenting-path phase of the primal-dual blossom method on the
// mirror graph, starting from all-zero duals. Outer vertices carry duals
// (now - offset), inner vertices (tau - now), and every event time is fixed
// when it is pushed, so the search runs like Dijkstra over a binary heap.
// Blossom bookkeeping (FIRST / vertex and edge labels) follows Gabow's
// implementation of Edmonds' algorithm.
template <class Tracker>
class AlternatingSearch {
public:
    AlternatingSearch(const MirrorGraph& mg, OddPathStats* stats)
        : mg_(mg),
          dummy_(static_cast<VertexId>(mg.id_count())),
          tracker_(mg.id_count() + 1),
          label_(mg.id_count() + 1, Label::none),
          inner_(mg.id_count(), 0),
          la_(mg.id_count(), kNoVertex),
          lb_(mg.id_count(), kNoVertex),
          offset_(mg.id_count(), 0.0),
          flag_(mg.id_count() + 1, 0),
          stats_(stats) {}

    // Vertex sequence of the cheapest alternating root-target path in the
    // mirror graph, or empty.
    std::vector<VertexId> run() {
        const VertexId root = mg_.root();
        label_[root] = Label::start;
        offset_[root] = 0.0;
        const VertexId first[] = {root};
        tracker_.set_base(first, dummy_);
        scan(root);

        while (!heap_.empty()) {
            const Event ev = heap_.top();
            heap_.pop();
            now_ = ev.time;
            if (stats_) ++stats_->events;
            if (ev.kind == EventKind::grow) {
                const VertexId y = ev.b;
                if (label_[y] != Label::none || inner_[y]) continue;
                if (y == mg_.target()) return augmenting_path(ev.a, y);
                grow(ev.a, y);
            } else {
                if (tracker_.base(ev.a) == tracker_.base(ev.b)) continue;
                shrink(ev.a, ev.b);
            }
        }
        return {};
    }

private:
    enum class Label : std::uint8_t { none, start, vertex, edge };
    enum class EventKind : std::uint8_t { grow, blossom };

    struct Event {
        double time;
        VertexId a;
        VertexId b;
        EventKind kind;

        bool operator>(const Event& o) const noexcept { return time > o.time; }
    };

    bool outer(VertexId x) const { return label_[x] != Label::none; }

    void push(double time, VertexId a, VertexId b, EventKind kind) {
        heap_.push({std::max(time, now_), a, b, kind});
    }

    void scan(VertexId v) {
        const double a = offset_[v];
        mg_.for_each_unmatched(v, [&](VertexId y, double w, EdgeId) {
            if (outer(y)) {
                if (tracker_.base(y) != tracker_.base(v)) {
                    push(0.5 * (w + a + offset_[y]), v, y, EventKind::blossom);
                }
            } else if (!inner_[y]) {
                push(a + w, v, y, EventKind::grow);
            }
        });
    }

    void grow(VertexId from, VertexId y) {
        if (stats_) ++stats_->grown;
        inner_[y] = 1;
        offset_[y] = now_;  // tau: time y became inner
        const VertexId z = mg_.mate(y);
        label_[z] = Label::vertex;
        la_[z] = from;
        offset_[z] = now_;
        const VertexId one[] = {z};
        tracker_.set_base(one, y);
        scan(z);
    }

    VertexId next_nonouter(VertexId r) { return tracker_.base(la_[mg_.mate(r)]); }

    void shrink(VertexId x, VertexId y) {
        if (stats_) ++stats_->blossoms;
        ++stamp_;
        VertexId r = tracker_.base(x);
        VertexId s = tracker_.base(y);
        flag_[r] = stamp_;
        flag_[s] = stamp_;
        VertexId join;
        for (;;) {
            if (s != dummy_) std::swap(r, s);
            r = next_nonouter(r);
            if (flag_[r] == stamp_) {
                join = r;
                break;
            }
            flag_[r] = stamp_;
        }

        members_.clear();
        const VertexId ends[2][2] = {{x, y}, {y, x}};
        for (const auto& end : ends) {
            for (VertexId v = tracker_.base(end[0]); v != join;) {
                const VertexId up = next_nonouter(v);
                label_[v] = Label::edge;
                la_[v] = end[0];
                lb_[v] = end[1];
                inner_[v] = 0;
                offset_[v] = 2.0 * now_ - offset_[v];
                members_.push_back(v);
                v = up;
            }
        }
        tracker_.set_base(members_, join);
        for (VertexId v : members_) scan(v);
    }

    // P(v): even alternating path from outer v to the root, starting with v's
    // matched edge. Emits P(v) up to and including `stop` (kNoVertex = root).
    std::vector<VertexId> augmenting_path(VertexId outer_end, VertexId target) const {
        enum class Op : std::uint8_t { emit, forward, reverse };
        struct Task {
            Op op;
            VertexId v;
            VertexId stop;
        };
        std::vector<VertexId> out;
        std::vector<Task> stack{{Op::forward, outer_end, kNoVertex}};
        while (!stack.empty()) {
            const Task task = stack.back();
            stack.pop_back();
            const VertexId v = task.v;
            if (task.op == Op::emit || v == task.stop) {
                out.push_back(v);
                continue;
            }
            const Label lab = label_[v];
            if (task.op == Op::forward) {
                if (lab == Label::start) {
                    out.push_back(v);
                } else if (lab == Label::vertex) {
                    const VertexId z = mg_.mate(v);
                    out.push_back(v);
                    out.push_back(z);
                    if (z != task.stop) stack.push_back({Op::forward, la_[v], task.stop});
                } else {
                    // P(v) = reverse(P(la) up to v) + P(lb)
                    stack.push_back({Op::forward, lb_[v], task.stop});
                    stack.push_back({Op::reverse, la_[v], v});
                }
            } else {
                // reverse of P(v) up to stop; ends with v
                if (lab == Label::vertex) {
                    const VertexId z = mg_.mate(v);
                    if (z == task.stop) {
                        out.push_back(z);
                        out.push_back(v);
                    } else {
                        stack.push_back({Op::emit, v, kNoVertex});
                        stack.push_back({Op::emit, z, kNoVertex});
                        stack.push_back({Op::reverse, la_[v], task.stop});
                    }
                } else if (lab == Label::edge) {
                    stack.push_back({Op::forward, la_[v], v});
                    stack.push_back({Op::reverse, lb_[v], task.stop});
                } else {
                    throw std::logic_error("alternating path reconstruction reached the root early");
                }
            }
        }
        std::reverse(out.begin(), out.end());
        out.push_back(target);
        return out;
    }

    const MirrorGraph& mg_;
    const VertexId dummy_;
    Tracker tracker_;
    std::vector<Label> label_;
    std::vector<std::uint8_t> inner_;
    std::vector<VertexId> la_;
    std::vector<VertexId> lb_;
    std::vector<double> offset_;  // outer: dual offset; inner: time it became inner
    std::vector<std::uint32_t> flag_;
    std::uint32_t stamp_ = 0;
    std::vector<VertexId> members_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> heap_;
    double now_ = 0.0;
    OddPathStats* stats_;
};

template <class Tracker>
std::vector<VertexId> search(const MirrorGraph& mg, OddPathStats* stats) {
    AlternatingSearch<Tracker> s(mg, stats);
    return s.run();
}

}  // namespace

std::optional<Path> shortest_parity_path(const WeightedGraph& g, VertexId s, VertexId t,
                                         Parity parity, TrackerKind tracker,
                                         OddPathStats* stats) {
    const MirrorGraph mg(g, s, t, parity);
    const std::vector<VertexId> alt = tracker == TrackerKind::naive
                                          ? search<NaiveBaseTracker>(mg, stats)
                                          : search<UnionFindBaseTracker>(mg, stats);
    if (alt.empty()) return std::nullopt;

    // Each matched edge joins the two copies of one original vertex.
    std::vector<VertexId> vertices;
    vertices.reserve(alt.size() / 2 + 1);
    for (VertexId x : alt) {
        const VertexId v = MirrorGraph::original_of(x);
        if (vertices.empty() || vertices.back() != v) vertices.push_back(v);
    }
    Path p = path_from_vertices(g, std::move(vertices));
    const bool odd = (p.length() % 2) == 1;
    if (odd != (parity == Parity::odd) || p.vertices.front() != s || p.vertices.back() != t) {
        throw std::logic_error("parity path search produced a path of the wrong shape");
    }
    return p;
}

}  // namespace pdiv

#include "pdiv/plane.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace pdiv {
namespace {

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_plane(double dx, double dy) { return (dy > 0.0 || (dy == 0.0 && dx > 0.0)) ? 0 : 1; }

long double cross(long double ax, long double ay, long double bx, long double by) {
    return ax * by - ay * bx;
}

}  // namespace

PlaneGraph rotation_from_coordinates(WeightedGraph graph, std::vector<Point> coords) {
    const std::size_t n = graph.vertex_count();
    if (coords.size() != n) {
        throw std::invalid_argument(
            fmt::format("{} coordinates given for {} vertices", coords.size(), n));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!std::isfinite(coords[v].x) || !std::isfinite(coords[v].y)) {
            throw std::invalid_argument(fmt::format("vertex {} has a non-finite coordinate", v));
        }
    }
    {
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), VertexId{0});
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            return std::tie(coords[a].x, coords[a].y) < std::tie(coords[b].x, coords[b].y);
        });
        for (std::size_t i = 1; i < n; ++i) {
            if (coords[order[i]] == coords[order[i - 1]]) {
                throw PlaneError(PlaneError::Kind::coincident_points,
                                 fmt::format("vertices {} and {} share coordinates ({}, {})",
                                             order[i - 1], order[i], coords[order[i]].x,
                                             coords[order[i]].y));
            }
        }
    }
    if (!is_connected(graph)) {
        throw PlaneError(PlaneError::Kind::disconnected_graph, "graph is not connected");
    }

    PlaneGraph pg;
    pg.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) pg.offsets_[v + 1] = pg.offsets_[v] + graph.degree(v);
    pg.rotation_.resize(pg.offsets_[n]);
    pg.position_.resize(2 * graph.edge_count());

    for (VertexId v = 0; v < n; ++v) {
        const Point p = coords[v];
        DartId* out = pg.rotation_.data() + pg.offsets_[v];
        std::size_t k = 0;
        for (const Neighbor& nb : graph.neighbors(v)) {
            out[k++] = dart_of(nb.edge, graph.edge(nb.edge).u != v);
        }
        auto target = [&](DartId d) {
            const Edge& e = graph.edge(edge_of(d));
            return coords[(d & 1U) ? e.u : e.v];
        };
        std::sort(out, out + k, [&](DartId a, DartId b) {
            const Point pa = target(a);
            const Point pb = target(b);
            const double ax = pa.x - p.x, ay = pa.y - p.y;
            const double bx = pb.x - p.x, by = pb.y - p.y;
            const int ha = half_plane(ax, ay), hb = half_plane(bx, by);
            if (ha != hb) return ha < hb;
            const long double c = cross(ax, ay, bx, by);
            if (c != 0) return c > 0;
            return std::hypot(ax, ay) < std::hypot(bx, by);
        });
        for (std::size_t i = 0; i < k; ++i) pg.position_[out[i]] = static_cast<std::uint32_t>(i);
    }
    pg.graph_ = std::move(graph);
    pg.coords_ = std::move(coords);
    return pg;
}

namespace {

int orientation(const Point& a, const Point& b, const Point& c) {
    const long double v = cross(static_cast<long double>(b.x) - a.x,
                                static_cast<long double>(b.y) - a.y,
                                static_cast<long double>(c.x) - a.x,
                                static_cast<long double>(c.y) - a.y);
    return (v > 0) - (v < 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

// True when the closed segments meet anywhere other than a shared endpoint.
bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
    const bool share = a == c || a == d || b == c || b == d;
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (share) {
        if (o1 != 0 || o2 != 0) return false;
        // Collinear with a shared endpoint: overlap iff the free endpoints
        // point the same way from the shared one.
        Point shared = (a == c || a == d) ? a : b;
        Point p = (shared == a) ? b : a;
        Point q = (shared == c) ? d : c;
        return (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y) > 0;
    }
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

void verify_straight_line_embedding(const PlaneGraph& pg) {
    const WeightedGraph& g = pg.graph();
    const auto coords = pg.coords();
    const std::size_t m = g.edge_count();
    const std::size_t n = g.vertex_count();
    if (m == 0) return;

    double minx = coords[0].x, maxx = minx, miny = coords[0].y, maxy = miny;
    for (const Point& p : coords) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const std::size_t side =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(m))));
    const double cw = (maxx - minx) / static_cast<double>(side) + 1e-300;
    const double ch = (maxy - miny) / static_cast<double>(side) + 1e-300;
    auto cell = [&](double v, double lo, double size) {
        return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (v - lo) / size)));
    };

    // Bucket every edge (and every vertex, as a degenerate segment) by bounding box.
    std::vector<std::vector<std::uint64_t>> buckets(side * side);
    auto insert = [&](std::uint64_t item, Point a, Point b) {
        const std::size_t x0 = cell(std::min(a.x, b.x), minx, cw), x1 = cell(std::max(a.x, b.x), minx, cw);
        const std::size_t y0 = cell(std::min(a.y, b.y), miny, ch), y1 = cell(std::max(a.y, b.y), miny, ch);
        for (std::size_t y = y0; y <= y1; ++y)
            for (std::size_t x = x0; x <= x1; ++x) buckets[y * side + x].push_back(item);
    };
    for (EdgeId e = 0; e < m; ++e) insert(e, coords[g.edge(e).u], coords[g.edge(e).v]);
    for (VertexId v = 0; v < n; ++v) insert(m + v, coords[v], coords[v]);

    for (const auto& bucket : buckets) {
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                std::uint64_t a = bucket[i], b = bucket[j];
                if (a >= m && b >= m) continue;
                if (a >= m) std::swap(a, b);
                const Edge& ea = g.edge(static_cast<EdgeId>(a));
                if (b >= m) {
                    const auto v = static_cast<VertexId>(b - m);
                    if (v == ea.u || v == ea.v) continue;
                    if (orientation(coords[ea.u], coords[ea.v], coords[v]) == 0 &&
                        on_segment(coords[ea.u], coords[ea.v], coords[v])) {
                        throw PlaneError(PlaneError::Kind::crossing_edges,
                                         fmt::format("vertex {} lies on edge {}", v, a));
                    }
                    continue;
                }
                const Edge& eb = g.edge(static_cast<EdgeId>(b));
                if (segments_conflict(coords[ea.u], coords[ea.v], coords[eb.u], coords[eb.v])) {
                    throw PlaneError(PlaneError::Kind::crossing_edges,
                                     fmt::format("edges {} and {} cross", a, b));
                }
            }
        }
    }
}

FaceMap trace_faces(const PlaneGraph& pg) {
    const WeightedGraph& g = pg.graph();
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (n >= 3 && m > 3 * n - 6) {
        throw PlaneError(PlaneError::Kind::too_many_edges,
                         fmt::format("{} edges exceed the planar bound 3n-6 = {}", m, 3 * n - 6));
    }

    FaceMap faces;
    constexpr FaceId unset = static_cast<FaceId>(-1);
    faces.face_of_dart.assign(2 * m, unset);
    for (DartId start = 0; start < 2 * m; ++start) {
        if (faces.face_of_dart[start] != unset) continue;
        const auto face = static_cast<FaceId>(faces.face_count++);
        std::uint32_t size = 0;
        DartId d = start;
        do {
            if (faces.face_of_dart[d] != unset) {
                throw PlaneError(PlaneError::Kind::bad_rotation,
                                 fmt::format("dart {} reached twice during face walk", d));
            }
            faces.face_of_dart[d] = face;
            ++size;
            d = pg.face_successor(d);
        } while (d != start);
        faces.face_size.push_back(size);
    }
    if (n == 0) faces.face_count = 1;
    if (n > 0 && m == 0) faces.face_count = 1;  // a lone vertex bounds one face with no darts

    const auto euler = static_cast<long long>(n) - static_cast<long long>(m) +
                       static_cast<long long>(faces.face_count);
    if (n > 0 && euler != 2) {
        throw PlaneError(PlaneError::Kind::euler_check_failed,
                         fmt::format("V - E + F = {} - {} + {} = {} (expected 2)", n, m,
                                     faces.face_count, euler));
    }
    faces.side_faces.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        faces.side_faces[e] = {faces.face_of_dart[dart_of(e, false)],
                               faces.face_of_dart[dart_of(e, true)]};
    }
    return faces;
}

DualGraph compute_dual(const WeightedGraph& primal, const FaceMap& faces,
                       std::span<const std::uint8_t> marked, std::optional<EdgeId> excluded) {
    const std::size_t m = primal.edge_count();
    const std::size_t f = faces.face_count;
    DualGraph dual;
    dual.face_count = f;
    dual.side_faces = faces.side_faces;
    dual.primal_to_dual.assign(m, kNoEdge);

    // Bucket candidates by their smaller face, then merge per (other face, class).
    std::vector<std::size_t> start(f + 1, 0);
    for (EdgeId e = 0; e < m; ++e) {
        const auto [a, b] = faces.side_faces[e];
        if (a == b || (excluded && e == *excluded)) continue;
        ++start[std::min(a, b) + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<EdgeId> bucket(start[f]);
    dual.candidate_count = start[f];
    {
        std::vector<std::size_t> fill(start.begin(), start.end() - 1);
        for (EdgeId e = 0; e < m; ++e) {
            const auto [a, b] = faces.side_faces[e];
            if (a == b || (excluded && e == *excluded)) continue;
            bucket[fill[std::min(a, b)]++] = e;
        }
    }

    std::vector<EdgeId> slot[2] = {std::vector<EdgeId>(f, kNoEdge), std::vector<EdgeId>(f, kNoEdge)};
    std::vector<EdgeId> members;  // primal edges folded into the current bucket's dual edges
    dual.edges.reserve(start[f]);
    for (FaceId a = 0; a < f; ++a) {
        members.clear();
        for (std::size_t k = start[a]; k < start[a + 1]; ++k) {
            const EdgeId e = bucket[k];
            const auto [fa, fb] = faces.side_faces[e];
            const FaceId other = fa == a ? fb : fa;
            const bool cls = !marked.empty() && marked[e] != 0;
            EdgeId& d = slot[cls][other];
            if (d == kNoEdge) {
                d = static_cast<EdgeId>(dual.edges.size());
                dual.edges.push_back({a, other, primal.weight(e), e, cls});
            } else {
                DualEdge& de = dual.edges[d];
                if (primal.weight(e) < de.w) {
                    de.w = primal.weight(e);
                    de.primal = e;
                }
            }
            members.push_back(e);
        }
        for (EdgeId e : members) {
            const auto [fa, fb] = faces.side_faces[e];
            const FaceId other = fa == a ? fb : fa;
            const bool cls = !marked.empty() && marked[e] != 0;
            slot[cls][other] = kNoEdge;
        }
    }
    for (EdgeId d = 0; d < dual.edges.size(); ++d) dual.primal_to_dual[dual.edges[d].primal] = d;
    return dual;
}

DualGraph compute_dual(const PlaneGraph& pg) {
    return compute_dual(pg.graph(), trace_faces(pg));
}

WeightedGraph DualGraph::as_graph() const {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (const DualEdge& d : edges) list.push_back({d.a, d.b, d.w});
    return WeightedGraph::build(face_count, std::move(list));
}

}  // namespace pdiv

#include "pdiv/gen.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <unordered_set>

namespace pdiv {

std::string_view to_string(Family f) noexcept { return f == Family::grid ? "grid" : "delaunay"; }

int orient2d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    const std::int64_t det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (det > 0) - (det < 0);
}

int incircle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
             const LatticePoint& d) {
    const std::int64_t adx = a.x - d.x, ady = a.y - d.y;
    const std::int64_t bdx = b.x - d.x, bdy = b.y - d.y;
    const std::int64_t cdx = c.x - d.x, cdy = c.y - d.y;

    const double fadx = double(adx), fady = double(ady);
    const double fbdx = double(bdx), fbdy = double(bdy);
    const double fcdx = double(cdx), fcdy = double(cdy);
    const double bc = fbdx * fcdy - fcdx * fbdy;
    const double ca = fcdx * fady - fadx * fcdy;
    const double ab = fadx * fbdy - fbdx * fady;
    const double alift = fadx * fadx + fady * fady;
    const double blift = fbdx * fbdx + fbdy * fbdy;
    const double clift = fcdx * fcdx + fcdy * fcdy;
    const double det = alift * bc + blift * ca + clift * ab;
    const double permanent = (std::abs(fbdx * fcdy) + std::abs(fcdx * fbdy)) * alift +
                             (std::abs(fcdx * fady) + std::abs(fadx * fcdy)) * blift +
                             (std::abs(fadx * fbdy) + std::abs(fbdx * fady)) * clift;
    constexpr double kEps = 0x1.0p-53;
    const double bound = (10.0 + 96.0 * kEps) * kEps * permanent;
    if (det > bound) return 1;
    if (det < -bound) return -1;

    using I = __int128;
    const I ebc = I(bdx * cdy - cdx * bdy);
    const I eca = I(cdx * ady - adx * cdy);
    const I eab = I(adx * bdy - bdx * ady);
    const I exact = I(adx * adx + ady * ady) * ebc + I(bdx * bdx + bdy * bdy) * eca +
                    I(cdx * cdx + cdy * cdy) * eab;
    return (exact > 0) - (exact < 0);
}

namespace {

// Triangles store vertices counter-clockwise; kGhost stands for the point at
// infinity, so hull edges carry a ghost triangle on their outer side.
// nb[i] is the triangle across the edge opposite vert[i].
struct Tri {
    std::uint32_t vert[3];
    std::uint32_t nb[3];
    bool alive;
};

constexpr std::uint32_t kNone = ~std::uint32_t{0};

class Triangulator {
public:
    explicit Triangulator(std::span<const LatticePoint> pts)
        : pts_(pts), ghost_(static_cast<std::uint32_t>(pts.size())),
          start_(pts.size() + 1, kNone), end_(pts.size() + 1, kNone) {}

    std::vector<std::array<VertexId, 3>> run() {
        const std::vector<std::uint32_t> order = spatial_order();
        std::size_t first = seed_triangle(order);
        for (std::size_t i = 2; i < order.size(); ++i) {
            if (i != first) insert(order[i]);
        }
        std::vector<std::array<VertexId, 3>> out;
        for (const Tri& t : tris_) {
            if (t.alive && !is_ghost(t)) out.push_back({t.vert[0], t.vert[1], t.vert[2]});
        }
        return out;
    }

private:
    bool is_ghost(const Tri& t) const {
        return t.vert[0] == ghost_ || t.vert[1] == ghost_ || t.vert[2] == ghost_;
    }

    static std::uint64_t hilbert(std::uint32_t x, std::uint32_t y, int bits) {
        const std::uint32_t n = 1U << bits;
        std::uint64_t d = 0;
        for (std::uint32_t s = n >> 1; s > 0; s >>= 1) {
            const std::uint32_t rx = (x & s) ? 1 : 0;
            const std::uint32_t ry = (y & s) ? 1 : 0;
            d += std::uint64_t(s) * s * ((3 * rx) ^ ry);
            if (ry == 0) {
                if (rx == 1) {
                    x = n - 1 - x;
                    y = n - 1 - y;
                }
                std::swap(x, y);
            }
        }
        return d;
    }

    std::vector<std::uint32_t> spatial_order() const {
        std::vector<std::uint64_t> key(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const auto hx = static_cast<std::uint32_t>(pts_[i].x >> (kLatticeBits - 16));
            const auto hy = static_cast<std::uint32_t>(pts_[i].y >> (kLatticeBits - 16));
            key[i] = hilbert(hx & 0xFFFF, hy & 0xFFFF, 16);
        }
        std::vector<std::uint32_t> order(pts_.size());
        std::iota(order.begin(), order.end(), 0U);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
        return order;
    }

    std::uint32_t make(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        Tri t{{a, b, c}, {kNone, kNone, kNone}, true};
        if (!free_.empty()) {
            const std::uint32_t id = free_.back();
            free_.pop_back();
            tris_[id] = t;
            return id;
        }
        tris_.push_back(t);
        return static_cast<std::uint32_t>(tris_.size() - 1);
    }

    // Returns the index in `order` of the third seed vertex.
    std::size_t seed_triangle(const std::vector<std::uint32_t>& order) {
        const std::uint32_t a = order[0], b = order[1];
        std::size_t k = 2;
        while (k < order.size() && orient2d(pts_[a], pts_[b], pts_[order[k]]) == 0) ++k;
        if (k == order.size()) throw GeneratorError("all points are collinear");
        std::uint32_t c = order[k];
        std::uint32_t p = a, q = b;
        if (orient2d(pts_[p], pts_[q], pts_[c]) < 0) std::swap(p, q);
        const std::uint32_t inner = make(p, q, c);
        const std::uint32_t g0 = make(q, p, ghost_);  // across pq, opposite c
        const std::uint32_t g1 = make(c, q, ghost_);  // across qc, opposite p
        const std::uint32_t g2 = make(p, c, ghost_);  // across cp, opposite q
        tris_[inner].nb[2] = g0;
        tris_[inner].nb[0] = g1;
        tris_[inner].nb[1] = g2;
        // Ghost (x, y, G): nb[2] is the solid side, nb[0] across (y, G), nb[1] across (G, x).
        tris_[g0].nb[2] = inner;
        tris_[g1].nb[2] = inner;
        tris_[g2].nb[2] = inner;
        tris_[g0].nb[0] = g2;  // edge (p, G) shared with g2 = (p, c, G)
        tris_[g0].nb[1] = g1;  // edge (G, q) shared with g1 = (c, q, G)
        tris_[g1].nb[0] = g0;
        tris_[g1].nb[1] = g2;
        tris_[g2].nb[0] = g1;
        tris_[g2].nb[1] = g0;
        last_ = inner;
        return k;
    }

    bool conflicts(std::uint32_t id, const LatticePoint& p) const {
        const Tri& t = tris_[id];
        int g = -1;
        for (int i = 0; i < 3; ++i) {
            if (t.vert[i] == ghost_) g = i;
        }
        if (g < 0) return incircle(pts_[t.vert[0]], pts_[t.vert[1]], pts_[t.vert[2]], p) > 0;
        const LatticePoint& x = pts_[t.vert[(g + 1) % 3]];
        const LatticePoint& y = pts_[t.vert[(g + 2) % 3]];
        const int o = orient2d(x, y, p);
        if (o != 0) return o > 0;
        const Tri& solid = tris_[t.nb[g]];
        return incircle(pts_[solid.vert[0]], pts_[solid.vert[1]], pts_[solid.vert[2]], p) > 0;
    }

    std::uint32_t locate(const LatticePoint& p) {
        std::uint32_t cur = last_;
        unsigned rot = 0;
        for (;;) {
            const Tri& t = tris_[cur];
            if (is_ghost(t)) {
                if (conflicts(cur, p)) return cur;
                for (int i = 0; i < 3; ++i) {
                    if (t.vert[i] == ghost_) cur = t.nb[i];
                }
                continue;
            }
            bool moved = false;
            rot = rot * 1103515245U + 12345U;
            const unsigned r = (rot >> 16) % 3;
            for (unsigned j = 0; j < 3; ++j) {
                const unsigned i = (r + j) % 3;
                if (orient2d(pts_[t.vert[(i + 1) % 3]], pts_[t.vert[(i + 2) % 3]], p) < 0) {
                    cur = t.nb[i];
                    moved = true;
                    break;
                }
            }
            if (!moved) return cur;
        }
    }

    void insert(std::uint32_t pid) {
        const LatticePoint& p = pts_[pid];
        const std::uint32_t first = locate(p);

        cavity_.clear();
        boundary_.clear();
        cavity_.push_back(first);
        tris_[first].alive = false;
        for (std::size_t h = 0; h < cavity_.size(); ++h) {
            const std::uint32_t id = cavity_[h];
            for (int i = 0; i < 3; ++i) {
                const std::uint32_t nb = tris_[id].nb[i];
                if (!tris_[nb].alive) continue;
                if (conflicts(nb, p)) {
                    tris_[nb].alive = false;
                    cavity_.push_back(nb);
                } else {
                    const Tri& t = tris_[id];
                    boundary_.push_back({t.vert[(i + 1) % 3], t.vert[(i + 2) % 3], nb});
                }
            }
        }

        for (const Boundary& e : boundary_) {
            const std::uint32_t id = make(e.a, e.b, pid);
            tris_[id].nb[2] = e.outside;
            Tri& out = tris_[e.outside];
            for (int i = 0; i < 3; ++i) {
                if (out.vert[i] != e.a && out.vert[i] != e.b) out.nb[i] = id;
            }
            start_[e.a] = id;
            end_[e.b] = id;
        }
        for (const Boundary& e : boundary_) {
            const std::uint32_t id = start_[e.a];
            tris_[id].nb[0] = start_[e.b];  // across (b, p)
            tris_[id].nb[1] = end_[e.a];    // across (p, a)
        }
        for (const Boundary& e : boundary_) {
            start_[e.a] = kNone;
            end_[e.b] = kNone;
        }
        for (std::uint32_t id : cavity_) free_.push_back(id);
        last_ = kNone;
        for (const Boundary& e : boundary_) {
            if (e.a != ghost_ && e.b != ghost_) {
                last_ = tris_[e.outside].nb[opposite(tris_[e.outside], e.a, e.b)];
                break;
            }
        }
    }

    int opposite(const Tri& t, std::uint32_t a, std::uint32_t b) const {
        for (int i = 0; i < 3; ++i) {
            if (t.vert[i] != a && t.vert[i] != b) return i;
        }
        return 0;
    }

    struct Boundary {
        std::uint32_t a, b, outside;
    };

    std::span<const LatticePoint> pts_;
    std::uint32_t ghost_;
    std::vector<Tri> tris_;
    std::vector<std::uint32_t> free_;
    std::vector<std::uint32_t> cavity_;
    std::vector<Boundary> boundary_;
    std::vector<std::uint32_t> start_, end_;
    std::uint32_t last_ = 0;
};

}  // namespace

std::vector<std::array<VertexId, 3>> delaunay_triangles(std::span<const LatticePoint> points) {
    if (points.size() < 3) throw GeneratorError("a triangulation needs at least 3 points");
    return Triangulator(points).run();
}

namespace {

void check_weights(const WeightSpec& w) {
    if (w.inverse_length) return;
    if (!(w.lo >= 0.0) || !(w.hi >= w.lo) || !std::isfinite(w.hi)) {
        throw GeneratorError(fmt::format("bad weight range [{}, {})", w.lo, w.hi));
    }
}

double draw_weight(SplitMix64& rng, const WeightSpec& spec, const Point& a, const Point& b) {
    if (spec.inverse_length) return 1.0 / std::hypot(a.x - b.x, a.y - b.y);
    return rng.uniform(spec.lo, spec.hi);
}

Instance finish(SplitMix64& rng, std::size_t n, std::vector<Edge> edges, std::vector<Point> coords,
                const WeightSpec& weights, const std::vector<VertexId>& boundary,
                TerminalPolicy policy) {
    for (Edge& e : edges) e.w = draw_weight(rng, weights, coords[e.u], coords[e.v]);
    Instance inst;
    const std::size_t m = edges.size();
    inst.graph = rotation_from_coordinates(WeightedGraph::build(n, std::move(edges)), std::move(coords));

    if (policy == TerminalPolicy::outer_face) {
        const std::size_t k = boundary.size();
        const std::size_t i = rng.below(k);
        std::size_t j = rng.below(k - 1);
        if (j >= i) ++j;
        inst.s = boundary[i];
        inst.t = boundary[j];
    } else {
        inst.s = static_cast<VertexId>(rng.below(n));
        VertexId t = static_cast<VertexId>(rng.below(n - 1));
        if (t >= inst.s) ++t;
        inst.t = t;
    }
    inst.b = static_cast<EdgeId>(rng.below(m));
    return inst;
}

}  // namespace

Instance gen_grid(const GeneratorConfig& cfg) {
    const std::size_t N = cfg.size;
    if (N < 2) throw GeneratorError("grid side must be at least 2");
    check_weights(cfg.weights);
    SplitMix64 rng(cfg.seed);

    const auto id = [N](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * N + c); };
    std::vector<Point> coords(N * N);
    std::vector<VertexId> boundary;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            coords[id(r, c)] = {double(c), double(r)};
            if (r == 0 || c == 0 || r == N - 1 || c == N - 1) boundary.push_back(id(r, c));
        }
    }
    std::vector<Edge> edges;
    edges.reserve(2 * N * (N - 1));
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c + 1 < N; ++c) edges.push_back({id(r, c), id(r, c + 1), 0.0});
    }
    for (std::size_t r = 0; r + 1 < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) edges.push_back({id(r, c), id(r + 1, c), 0.0});
    }
    return finish(rng, N * N, std::move(edges), std::move(coords), cfg.weights, boundary, cfg.terminals);
}

Instance gen_delaunay(const GeneratorConfig& cfg) {
    const std::size_t p = cfg.size;
    if (p < 3) throw GeneratorError("need at least 3 distinct points");
    if (p >= (std::size_t{1} << 31)) throw GeneratorError("too many points");
    check_weights(cfg.weights);
    SplitMix64 rng(cfg.seed);

    std::vector<LatticePoint> pts;
    pts.reserve(p);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * p);
    while (pts.size() < p) {
        const std::uint64_t x = rng.next() >> (64 - kLatticeBits);
        const std::uint64_t y = rng.next() >> (64 - kLatticeBits);
        if (seen.insert((x << kLatticeBits) | y).second) {
            pts.push_back({std::int64_t(x), std::int64_t(y)});
        }
    }

    const auto tris = delaunay_triangles(pts);
    std::vector<std::uint64_t> keys;  // (min << 32 | max), each edge once per incident triangle
    keys.reserve(3 * tris.size());
    for (const auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            const std::uint64_t a = t[i], b = t[(i + 1) % 3];
            keys.push_back(a < b ? (a << 32 | b) : (b << 32 | a));
        }
    }
    std::sort(keys.begin(), keys.end());

    std::vector<Edge> edges;
    std::vector<std::uint8_t> on_hull(p, 0);
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        const auto u = static_cast<VertexId>(keys[i] >> 32);
        const auto v = static_cast<VertexId>(keys[i] & 0xFFFFFFFFULL);
        edges.push_back({u, v, 0.0});
        if (j - i == 1) on_hull[u] = on_hull[v] = 1;
        i = j;
    }
    std::vector<VertexId> boundary;
    for (VertexId v = 0; v < p; ++v) {
        if (on_hull[v]) boundary.push_back(v);
    }

    constexpr double kScale = 1.0 / double(std::uint64_t{1} << kLatticeBits);
    std::vector<Point> coords(p);
    for (std::size_t i = 0; i < p; ++i) coords[i] = {double(pts[i].x) * kScale, double(pts[i].y) * kScale};
    return finish(rng, p, std::move(edges), std::move(coords), cfg.weights, boundary, cfg.terminals);
}

Instance generate(const GeneratorConfig& cfg) {
    return cfg.family == Family::grid ? gen_grid(cfg) : gen_delaunay(cfg);
}

}  // namespace pdiv

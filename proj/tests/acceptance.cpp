// Acceptance suite. Each criterion prints one PASS/FAIL line; run with
// criterion numbers as arguments to select a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "commands.hpp"
#include "pdiv/applications.hpp"
#include "pdiv/diversion.hpp"
#include "pdiv/gen.hpp"
#include "pdiv/parity.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pdiv;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> v) { return cli::quantile(std::move(v), 0.5); }

struct Outcome {
    bool pass;
    std::string detail;
};

long peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string key;
    while (status >> key) {
        if (key == "VmHWM:") {
            long kb = 0;
            status >> kb;
            return kb;
        }
        status.ignore(1 << 12, '\n');
    }
    return -1;
}

Instance make(Family f, std::size_t size, std::uint64_t seed, bool invlen = false) {
    GeneratorConfig cfg;
    cfg.family = f;
    cfg.size = size;
    cfg.seed = seed;
    cfg.weights.inverse_length = invlen;
    return generate(cfg);
}

std::pair<VertexId, VertexId> distinct_pair(SplitMix64& rng, std::size_t n) {
    const auto s = static_cast<VertexId>(rng.below(n));
    auto t = static_cast<VertexId>(rng.below(n - 1));
    if (t >= s) ++t;
    return {s, t};
}

bool odd_length(const Path& p) { return p.length() % 2 == 1; }

// Full check of an optimal or already-bridge answer, witness cycle included.
bool valid(const PlaneGraph& pg, const FaceMap& faces, const DiversionQuery& q, const DiversionSolution& sol) {
    if (sol.status == DiversionStatus::infeasible) return true;
    return static_cast<bool>(validate_solution(pg.graph(), q, sol, &faces));
}

// Criterion 1 instances, shared with criterion 4.
struct OddCase {
    WeightedGraph g;
    VertexId s, t;
};

std::vector<OddCase> odd_cases() {
    SplitMix64 rng(20240501);
    std::vector<OddCase> cases;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 2 + rng.below(11);
        const double density = 0.05 + 0.85 * rng.uniform();
        WeightedGraph g = fixtures::random_connected(rng, n, density);
        const auto [s, t] = distinct_pair(rng, n);
        cases.push_back({std::move(g), s, t});
    }
    return cases;
}

// Criterion 2 instances, shared with criteria 3 and 4.
std::vector<Instance> diversion_cases() {
    std::vector<Instance> cases;
    for (std::uint64_t i = 0; i < 200; ++i) {
        if (i % 2 == 0) {
            cases.push_back(make(Family::grid, 2 + (i / 2) % 4, 7000 + i));
        } else {
            cases.push_back(make(Family::delaunay, 4 + (i / 2) % 7, 7000 + i));
        }
    }
    return cases;
}

Outcome criterion1() {
    std::size_t mismatches = 0, found = 0, parity_errors = 0;
    const auto t0 = Clock::now();
    for (const OddCase& c : odd_cases()) {
        const auto expect = oracle::parity_path_cost(c.g, c.s, c.t, Parity::odd);
        const auto got = shortest_odd_path(c.g, c.s, c.t);
        if (got.has_value() != expect.has_value()) {
            ++mismatches;
            continue;
        }
        if (!got) continue;
        ++found;
        if (!check_path(c.g, *got).empty() || !odd_length(*got)) ++parity_errors;
        if (std::abs(got->total_weight - *expect) > 1e-9 * std::max(1.0, *expect)) ++mismatches;
    }
    return {mismatches == 0 && parity_errors == 0,
            fmt::format("500 graphs, {} with an odd path, {} mismatches, {} malformed paths, {:.1f} s",
                        found, mismatches, parity_errors, ms_since(t0) / 1000)};
}

Outcome criterion2() {
    std::size_t mismatches = 0, literal = 0, literal_mismatch = 0;
    std::map<DiversionStatus, std::size_t> statuses;
    const auto t0 = Clock::now();
    for (const Instance& inst : diversion_cases()) {
        const WeightedGraph& g = inst.graph.graph();
        const DiversionQuery q{inst.s, inst.t, inst.b, std::nullopt};
        const auto expect = oracle::diversion_by_sides(g, q);
        if (g.edge_count() <= 14) {
            const auto by_edges = oracle::diversion_by_edge_subsets(g, q);
            ++literal;
            literal_mismatch += by_edges.status != expect.status || by_edges.cost != expect.cost;
        }
        const auto got = DiversionSolver(inst.graph).solve(q);
        ++statuses[got.status];
        mismatches += got.status != expect.status || got.cost != expect.cost;
    }
    return {mismatches == 0 && literal_mismatch == 0,
            fmt::format("200 instances ({} optimal, {} already-bridge, {} infeasible), {} mismatches; "
                        "edge-subset cross-check on {} instances, {} mismatches, {:.1f} s",
                        statuses[DiversionStatus::optimal], statuses[DiversionStatus::already_bridge],
                        statuses[DiversionStatus::infeasible], mismatches, literal, literal_mismatch,
                        ms_since(t0) / 1000)};
}

Outcome criterion3() {
    std::size_t checked = 0, failures = 0, internal = 0;
    auto run = [&](const Instance& inst, const DiversionSolver& solver, EdgeId b, TrackerKind tk) {
        const DiversionQuery q{inst.s, inst.t, b, std::nullopt};
        try {
            const auto sol = solver.solve(q, tk);
            if (sol.status == DiversionStatus::optimal) {
                ++checked;
                failures += !valid(inst.graph, solver.faces(), q, sol);
            }
        } catch (const DiversionError&) {
            ++internal;
        }
    };
    for (const Instance& inst : diversion_cases()) {
        const DiversionSolver solver(inst.graph);
        for (EdgeId b = 0; b < inst.graph.graph().edge_count(); ++b) {
            run(inst, solver, b, TrackerKind::naive);
            run(inst, solver, b, TrackerKind::union_find);
        }
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Instance inst = make(seed % 2 ? Family::grid : Family::delaunay, seed % 2 ? 100 : 10000, seed);
        const DiversionSolver solver(inst.graph);
        run(inst, solver, inst.b, TrackerKind::union_find);
        SplitMix64 rng(seed);
        for (int k = 0; k < 5; ++k) {
            run(inst, solver, static_cast<EdgeId>(rng.below(inst.graph.graph().edge_count())),
                TrackerKind::naive);
        }
    }
    return {failures == 0 && internal == 0 && checked > 0,
            fmt::format("{} optimal answers validated, {} failures, {} internal validation errors", checked,
                        failures, internal)};
}

Outcome criterion4() {
    std::size_t differences = 0, compared = 0;
    for (const OddCase& c : odd_cases()) {
        const auto a = shortest_odd_path(c.g, c.s, c.t, TrackerKind::naive);
        const auto b = shortest_odd_path(c.g, c.s, c.t, TrackerKind::union_find);
        ++compared;
        differences += a.has_value() != b.has_value() || (a && a->total_weight != b->total_weight);
    }
    for (const Instance& inst : diversion_cases()) {
        const DiversionSolver solver(inst.graph);
        const DiversionQuery q{inst.s, inst.t, inst.b, std::nullopt};
        const auto a = solver.solve(q, TrackerKind::naive);
        const auto b = solver.solve(q, TrackerKind::union_find);
        ++compared;
        differences += a.status != b.status || a.cost != b.cost;
    }
    double naive_ms = 0, uf_ms = 0;
    for (std::size_t n : {10000, 50000}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Instance inst = make(Family::delaunay, n, seed);
            const DiversionSolver solver(inst.graph);
            const DiversionQuery q{inst.s, inst.t, inst.b, std::nullopt};
            auto t0 = Clock::now();
            const auto a = solver.solve(q, TrackerKind::naive);
            naive_ms += ms_since(t0);
            t0 = Clock::now();
            const auto b = solver.solve(q, TrackerKind::union_find);
            uf_ms += ms_since(t0);
            const auto pa = shortest_odd_path(inst.graph.graph(), inst.s, inst.t, TrackerKind::naive);
            const auto pb = shortest_odd_path(inst.graph.graph(), inst.s, inst.t, TrackerKind::union_find);
            compared += 2;
            differences += a.status != b.status || a.cost != b.cost;
            differences += pa.has_value() != pb.has_value() || (pa && pa->total_weight != pb->total_weight);
        }
    }
    return {differences == 0,
            fmt::format("{} comparisons, {} differences; Delaunay 10k/50k diversion time naive {:.0f} ms, "
                        "union-find {:.0f} ms ({:+.1f}%)",
                        compared, differences, naive_ms, uf_ms, 100.0 * (uf_ms - naive_ms) / naive_ms)};
}

double timed_solve(const Instance& inst, TrackerKind tk = TrackerKind::union_find) {
    const auto t0 = Clock::now();
    const DiversionSolver solver(inst.graph);
    const auto sol = solver.solve({inst.s, inst.t, inst.b, std::nullopt}, tk);
    const double ms = ms_since(t0);
    (void)sol;
    return ms;
}

Outcome criterion5() {
    std::vector<double> small;
    for (std::uint64_t rep = 0; rep < 100; ++rep) small.push_back(timed_solve(make(Family::grid, 100, 1 + rep)));
    std::vector<double> large;
    for (std::uint64_t rep = 0; rep < 3; ++rep) large.push_back(timed_solve(make(Family::grid, 1000, 1 + rep)));
    const double small_med = median(small) / 1000, large_med = median(large) / 1000;
    const long rss = peak_rss_kb();
    return {small_med <= 0.5 && large_med <= 60.0,
            fmt::format("100x100 median {:.4f} s over 100 reps (bound 0.5), 1000x1000 median {:.2f} s over 3 "
                        "reps (bound 60), peak RSS {:.0f} MB",
                        small_med, large_med, rss / 1024.0)};
}

Outcome criterion6() {
    std::vector<double> ratios;
    std::string detail;
    for (std::size_t n : {25000, 50000, 100000, 200000}) {
        std::vector<double> times;
        for (std::uint64_t rep = 0; rep < 20; ++rep) times.push_back(timed_solve(make(Family::delaunay, n, 1 + rep)));
        const double med = median(times);
        const double ratio = med / (double(n) * std::log2(double(n)));
        ratios.push_back(ratio);
        detail += fmt::format("{}k: {:.1f} ms; ", n / 1000, med);
    }
    const double spread = *std::max_element(ratios.begin(), ratios.end()) /
                          *std::min_element(ratios.begin(), ratios.end());
    return {spread <= 3.0, detail + fmt::format("max/min of median/(n log2 n) = {:.2f} (bound 3)", spread)};
}

Outcome criterion7() {
    bool ok = true;
    std::string detail;
    for (std::size_t n : {50000, 100000, 150000, 200000}) {
        const Instance inst = make(Family::delaunay, n, n);
        const WeightedGraph& g = inst.graph.graph();
        std::vector<double> naive, uf;
        std::size_t bad_paths = 0;
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = Clock::now();
            const auto a = shortest_odd_path(g, inst.s, inst.t, TrackerKind::naive);
            naive.push_back(ms_since(t0));
            t0 = Clock::now();
            const auto b = shortest_odd_path(g, inst.s, inst.t, TrackerKind::union_find);
            uf.push_back(ms_since(t0));
            bad_paths += !a || !b || !odd_length(*a) || a->total_weight != b->total_weight;
        }
        const double worst = std::max(*std::max_element(naive.begin(), naive.end()),
                                      *std::max_element(uf.begin(), uf.end()));
        const double slowdown = median(uf) / median(naive);
        ok = ok && worst < 5000.0 && slowdown <= 1.25 && bad_paths == 0;
        detail += fmt::format("{}k: naive {:.0f} ms, union-find {:.0f} ms (x{:.2f}); ", n / 1000, median(naive),
                              median(uf), slowdown);
    }
    return {ok, detail + "bounds: < 5000 ms, union-find/naive <= 1.25"};
}

Outcome criterion8() {
    std::size_t equal = 0, fewer = 0, invalid = 0;
    std::string counts;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = make(Family::delaunay, 35, seed, true);
        const WeightedGraph& g = inst.graph.graph();
        const DiverseCutsReport report = diverse_cuts(inst.graph, inst.s, inst.t);
        const FaceMap faces = trace_faces(inst.graph);
        equal += !report.unique_cuts.empty() &&
                 report.unique_cuts.front().weight == min_cut_weight(g, inst.s, inst.t);
        fewer += report.unique_cuts.size() < g.edge_count();
        for (const UniqueCut& c : report.unique_cuts) {
            for (EdgeId b : c.generators) {
                invalid += !valid(inst.graph, faces, {inst.s, inst.t, b, std::nullopt}, report.per_edge[b]);
            }
        }
        counts += fmt::format("{}/{} ", report.unique_cuts.size(), g.edge_count());
    }
    return {equal == 20 && fewer == 20 && invalid == 0,
            fmt::format("cheapest = min cut on {}/20, unique < m on {}/20, {} invalid; unique/m: {}", equal,
                        fewer, invalid, counts)};
}

Outcome criterion9() {
    std::size_t euler = 0, grid_formula = 0, circles = 0, subdivision = 0, parity = 0, checks = 0;
    for (std::size_t N = 2; N <= 40; ++N) {
        const Instance inst = make(Family::grid, N, N);
        const WeightedGraph& g = inst.graph.graph();
        grid_formula += g.vertex_count() != N * N || g.edge_count() != 2 * N * (N - 1);
        const FaceMap f = trace_faces(inst.graph);
        euler += long(g.vertex_count()) - long(g.edge_count()) + long(f.face_count) != 2;
        checks += 3;
    }
    for (std::size_t p = 3; p <= 200; ++p) {
        GeneratorConfig cfg;
        cfg.family = Family::delaunay;
        cfg.size = p;
        cfg.seed = p;
        const Instance inst = generate(cfg);
        const auto coords = inst.graph.coords();
        std::vector<LatticePoint> pts;
        for (const Point& pt : coords) {
            pts.push_back({std::llround(std::ldexp(pt.x, kLatticeBits)), std::llround(std::ldexp(pt.y, kLatticeBits))});
        }
        const auto tris = delaunay_triangles(pts);
        for (const auto& t : tris) {
            for (const LatticePoint& d : pts) circles += incircle(pts[t[0]], pts[t[1]], pts[t[2]], d) > 0;
        }
        const WeightedGraph& g = inst.graph.graph();
        const FaceMap f = trace_faces(inst.graph);
        euler += long(g.vertex_count()) - long(g.edge_count()) + long(f.face_count) != 2;
        std::size_t non_triangles = 0;
        for (std::uint32_t sz : f.face_size) non_triangles += sz != 3;
        euler += non_triangles > 1;
        checks += 2;
    }
    SplitMix64 rng(9);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + rng.below(30);
        const WeightedGraph g = fixtures::random_connected(rng, n, 0.2);
        std::vector<std::uint8_t> in_f(g.edge_count());
        std::size_t f = 0;
        for (auto& x : in_f) f += (x = rng.below(2));
        const SubdividedGraph sg = subdivide_except(g, in_f);
        subdivision += sg.graph.vertex_count() != n + g.edge_count() - f;
        const auto [s, t] = distinct_pair(rng, n);
        for (Parity par : {Parity::odd, Parity::even}) {
            const auto p = shortest_parity_path(g, s, t, par);
            if (p) parity += !check_path(g, *p).empty() || odd_length(*p) != (par == Parity::odd);
        }
        checks += 3;
    }
    const std::size_t bad = euler + grid_formula + circles + subdivision + parity;
    return {bad == 0, fmt::format("{} checks: Euler/triangulation {}, grid formula {}, circumcircle {}, "
                                  "subdivision {}, parity {} violations",
                                  checks, euler, grid_formula, circles, subdivision, parity)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"odd-path oracle equivalence", criterion1},
        {"diversion oracle equivalence", criterion2},
        {"solution validity", criterion3},
        {"tracker equivalence", criterion4},
        {"grid timing", criterion5},
        {"Delaunay scaling shape", criterion6},
        {"odd-path timing on Delaunay", criterion7},
        {"diverse cuts property", criterion8},
        {"structural invariants", criterion9},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!selected.empty() && !selected.count(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

#include "graph_file.hpp"
#include "pdiv/applications.hpp"
#include "pdiv/diversion.hpp"

namespace pdiv::cli {
namespace {

using Clock = std::chrono::steady_clock;

double millis(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path));
    return in;
}

PlaneGraph load_plane(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_plane_graph(in);
}

TrackerKind tracker_from(const std::string& text) {
    if (auto t = parse_tracker(text)) return *t;
    throw InputError(fmt::format("unknown tracker '{}' (naive or unionfind)", text));
}

Family family_from(const std::string& text) {
    if (text == "grid") return Family::grid;
    if (text == "delaunay") return Family::delaunay;
    throw InputError(fmt::format("unknown family '{}' (grid or delaunay)", text));
}

WeightSpec weights_from(const std::string& text) {
    WeightSpec spec;
    if (text == "invlen") {
        spec.inverse_length = true;
        return spec;
    }
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("no colon");
        std::size_t used = 0;
        spec.lo = std::stod(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("trailing");
        const std::string hi = text.substr(colon + 1);
        spec.hi = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InputError(fmt::format("bad weight spec '{}' (lo:hi or invlen)", text));
    }
    return spec;
}

TerminalPolicy terminals_from(const std::string& text) {
    if (text == "uniform") return TerminalPolicy::uniform;
    if (text == "outer") return TerminalPolicy::outer_face;
    throw InputError(fmt::format("unknown terminal policy '{}' (uniform or outer)", text));
}

void check_vertex(const WeightedGraph& g, VertexId v, const char* name) {
    if (v >= g.vertex_count()) {
        throw InputError(fmt::format("--{} {} is not a vertex (n={})", name, v, g.vertex_count()));
    }
}

EdgeId edge_from(const WeightedGraph& g, const std::string& text) {
    const auto comma = text.find(',');
    VertexId u = 0, v = 0;
    try {
        if (comma == std::string::npos) throw std::invalid_argument("no comma");
        std::size_t used = 0;
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        u = static_cast<VertexId>(std::stoul(a, &used));
        if (used != a.size()) throw std::invalid_argument("trailing");
        v = static_cast<VertexId>(std::stoul(b, &used));
        if (used != b.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InputError(fmt::format("bad edge '{}' (expected u,v)", text));
    }
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
        throw InputError(fmt::format("edge {} names a missing vertex", text));
    }
    const auto e = g.find_edge(u, v);
    if (!e) throw InputError(fmt::format("no edge between {} and {}", u, v));
    return *e;
}

std::string edge_text(const WeightedGraph& g, EdgeId e, const char* sep) {
    return fmt::format("{}{}{}", g.edge(e).u, sep, g.edge(e).v);
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") return fallback;
    file.open(path);
    if (!file) throw InputError(fmt::format("cannot write '{}'", path));
    return file;
}

struct SolveArgs {
    std::string file;
    VertexId s = 0, t = 0;
    std::string b;
    double budget = 0.0;
    std::string tracker = "unionfind";
    bool verify = false;
    CLI::Option* budget_opt = nullptr;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const PlaneGraph pg = load_plane(a.file);
    const WeightedGraph& g = pg.graph();
    if (a.verify) verify_straight_line_embedding(pg);
    check_vertex(g, a.s, "s");
    check_vertex(g, a.t, "t");
    if (a.s == a.t) throw InputError("--s and --t must differ");
    DiversionQuery q{a.s, a.t, edge_from(g, a.b), std::nullopt};
    if (a.budget_opt->count()) q.budget = a.budget;

    const DiversionSolution sol = DiversionSolver(pg).solve(q, tracker_from(a.tracker));
    if (sol.status == DiversionStatus::infeasible) {
        out << "infeasible\n";
    } else {
        out << to_string(sol.status) << ' ' << format_number(sol.cost) << '\n';
        for (EdgeId e : sol.removed) out << edge_text(g, e, " ") << '\n';
    }
    if (q.budget) out << "within-budget: " << (sol.within_budget.value_or(false) ? "yes" : "no") << '\n';
    return sol.status == DiversionStatus::infeasible ? kExitNoSolution : kExitOk;
}

struct GenArgs {
    std::string family = "grid";
    std::size_t size = 10;
    std::uint64_t seed = 1;
    std::string weights = "0:1000";
    std::string terminals = "uniform";
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    GeneratorConfig cfg;
    cfg.family = family_from(a.family);
    cfg.size = a.size;
    cfg.seed = a.seed;
    cfg.weights = weights_from(a.weights);
    cfg.terminals = terminals_from(a.terminals);
    const Instance inst = generate(cfg);
    const Edge& b = inst.graph.graph().edge(inst.b);
    const std::string sidecar = fmt::format("{} {} {} {}", inst.s, inst.t, b.u, b.v);

    if (a.out.empty() || a.out == "-") {
        write_graph_file(out, inst.graph);
        err << sidecar << '\n';
        return kExitOk;
    }
    std::ofstream file(a.out);
    if (!file) throw InputError(fmt::format("cannot write '{}'", a.out));
    write_graph_file(file, inst.graph);
    std::ofstream side(a.out + ".terminals");
    if (!side) throw InputError(fmt::format("cannot write '{}.terminals'", a.out));
    side << sidecar << '\n';
    out << sidecar << '\n';
    return kExitOk;
}

struct BenchArgs {
    std::string family = "grid";
    std::vector<std::size_t> sizes;
    std::size_t reps = 100;
    std::uint64_t seed = 1;
    std::string tracker = "unionfind";
    std::string task = "diversion";
    std::string weights = "0:1000";
    std::string terminals = "uniform";
    std::string out;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchConfig cfg;
    cfg.family = family_from(a.family);
    cfg.sizes = a.sizes;
    cfg.reps = a.reps;
    cfg.seed = a.seed;
    if (a.tracker == "both") {
        cfg.trackers = {TrackerKind::naive, TrackerKind::union_find};
    } else {
        cfg.trackers = {tracker_from(a.tracker)};
    }
    if (a.task == "diversion") {
        cfg.task = BenchTask::diversion;
    } else if (a.task == "oddpath") {
        cfg.task = BenchTask::oddpath;
    } else {
        throw InputError(fmt::format("unknown task '{}' (diversion or oddpath)", a.task));
    }
    cfg.weights = weights_from(a.weights);
    cfg.terminals = terminals_from(a.terminals);
    if (cfg.reps == 0) throw InputError("--reps must be positive");

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw InputError(fmt::format("cannot write '{}'", a.out));
    }
    const auto records = run_bench(cfg);
    if (file.is_open()) write_bench_csv(file, records);

    out << fmt::format("{:<9} {:>7} {:>9} {:>9} {:>9} {:>5} {:>10} {:>10} {:>10} {:>10}\n", "family",
                       "size", "n", "m", "tracker", "reps", "t25_ms", "t50_ms", "t75_ms", "ref_ms");
    for (const BenchSummary& s : summarize(records)) {
        out << fmt::format("{:<9} {:>7} {:>9} {:>9} {:>9} {:>5} {:>10.3f} {:>10.3f} {:>10.3f} {:>10.2f}\n",
                           to_string(s.family), s.size, s.n, s.m, to_string(s.tracker), s.reps, s.t25,
                           s.t50, s.t75, s.reference_ms);
    }
    return kExitOk;
}

struct DiverseArgs {
    std::string file;
    VertexId s = 0, t = 0;
    std::string tracker = "unionfind";
    std::string out;
};

int cmd_diverse(const DiverseArgs& a, std::ostream& out) {
    const PlaneGraph pg = load_plane(a.file);
    const WeightedGraph& g = pg.graph();
    check_vertex(g, a.s, "s");
    check_vertex(g, a.t, "t");
    if (a.s == a.t) throw InputError("--s and --t must differ");

    const DiverseCutsReport report = diverse_cuts(pg, a.s, a.t, tracker_from(a.tracker));
    out << "unique-cuts: " << report.unique_cuts.size() << '\n';
    out << "feasible-edges: " << report.feasible_edges << " of " << g.edge_count() << '\n';
    out << "min-cut: " << format_number(min_cut_weight(g, a.s, a.t)) << '\n';

    std::ofstream file;
    std::ostream& csv = open_output(a.out, file, out);
    csv << "weight,size,multiplicity,edges\n";
    for (const UniqueCut& c : report.unique_cuts) {
        std::string edges;
        for (EdgeId e : c.edges) {
            if (!edges.empty()) edges += ' ';
            edges += edge_text(g, e, "-");
        }
        csv << fmt::format("{},{},{},{}\n", format_number(c.weight), c.edges.size(), c.multiplicity,
                           edges);
    }
    return kExitOk;
}

struct OddPathArgs {
    std::string file;
    VertexId s = 0, t = 0;
    std::string parity = "odd";
    std::string tracker = "unionfind";
};

int cmd_oddpath(const OddPathArgs& a, std::ostream& out) {
    std::ifstream in = open_input(a.file);
    const GraphFile gf = read_graph_file(in, true);
    const WeightedGraph& g = gf.graph;
    check_vertex(g, a.s, "s");
    check_vertex(g, a.t, "t");
    Parity parity;
    if (a.parity == "odd") {
        parity = Parity::odd;
    } else if (a.parity == "even") {
        parity = Parity::even;
    } else {
        throw InputError(fmt::format("unknown parity '{}' (odd or even)", a.parity));
    }
    const auto path = shortest_parity_path(g, a.s, a.t, parity, tracker_from(a.tracker));
    if (!path) {
        out << fmt::format("no {} path from {} to {}\n", a.parity, a.s, a.t);
        return kExitNoSolution;
    }
    out << "cost " << format_number(path->total_weight) << '\n';
    out << "path";
    for (VertexId v : path->vertices) out << ' ' << v;
    out << '\n';
    return kExitOk;
}

}  // namespace

double quantile(std::vector<double> values, double q) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const double pos = q * double(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - double(lo)) * (values[hi] - values[lo]);
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRecord> records;
    for (std::size_t size : cfg.sizes) {
        for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
            GeneratorConfig gc;
            gc.family = cfg.family;
            gc.size = size;
            gc.seed = cfg.seed + rep;
            gc.weights = cfg.weights;
            gc.terminals = cfg.terminals;
            const Instance inst = generate(gc);
            const WeightedGraph& g = inst.graph.graph();
            auto emit = [&](TrackerKind tracker, const char* phase, double ms) {
                records.push_back({cfg.family, size, g.vertex_count(), g.edge_count(), gc.seed, rep,
                                   tracker, phase, ms});
            };
            for (TrackerKind tracker : cfg.trackers) {
                if (cfg.task == BenchTask::oddpath) {
                    const auto t0 = Clock::now();
                    const auto path = shortest_odd_path(g, inst.s, inst.t, tracker);
                    emit(tracker, "total", millis(t0, Clock::now()));
                    (void)path;
                    continue;
                }
                SolveTimings timings;
                const auto t0 = Clock::now();
                const DiversionSolver solver(inst.graph);
                const auto sol = solver.solve({inst.s, inst.t, inst.b, std::nullopt}, tracker, nullptr,
                                              &timings);
                const double total = millis(t0, Clock::now());
                (void)sol;
                emit(tracker, "total", total);
                emit(tracker, "dual", timings.dual_ms);
                emit(tracker, "oddpath", timings.oddpath_ms);
            }
        }
    }
    return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::tuple<std::size_t, int>, std::vector<const BenchRecord*>> groups;
    for (const BenchRecord& r : records) {
        if (r.phase == "total") groups[{r.size, static_cast<int>(r.tracker)}].push_back(&r);
    }
    std::vector<BenchSummary> out;
    for (const auto& [key, rows] : groups) {
        std::vector<double> times, ns, ms;
        for (const BenchRecord* r : rows) {
            times.push_back(r->millis);
            ns.push_back(double(r->n));
            ms.push_back(double(r->m));
        }
        const BenchRecord& first = *rows.front();
        const double n = quantile(ns, 0.5);
        out.push_back({first.family, first.size, static_cast<std::size_t>(std::lround(n)),
                       static_cast<std::size_t>(std::lround(quantile(ms, 0.5))), first.tracker,
                       rows.size(), quantile(times, 0.25), quantile(times, 0.5), quantile(times, 0.75),
                       n * std::log2(n) / 100.0});
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "family,n,m,seed,repetition,tracker,phase,millis\n";
    for (const BenchRecord& r : records) {
        out << fmt::format("{},{},{},{},{},{},{},{:.6f}\n", to_string(r.family), r.n, r.m, r.seed,
                           r.repetition, to_string(r.tracker), r.phase, r.millis);
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar s-t diversion: solve, generate, benchmark"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pdiv 0.1.0");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "minimum-weight removal making b an s-t bridge");
    solve->add_option("graph", solve_args.file, "graph file")->required();
    solve->add_option("--s", solve_args.s, "source vertex")->required();
    solve->add_option("--t", solve_args.t, "target vertex")->required();
    solve->add_option("--b", solve_args.b, "edge as u,v")->required();
    solve_args.budget_opt = solve->add_option("--budget", solve_args.budget, "removal budget k");
    solve->add_option("--tracker", solve_args.tracker, "naive or unionfind");
    solve->add_flag("--verify-embedding", solve_args.verify, "check that no two edges cross");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--family", gen_args.family, "grid or delaunay");
    gen->add_option("--size", gen_args.size, "grid side N or Delaunay point count");
    gen->add_option("--seed", gen_args.seed, "PRNG seed");
    gen->add_option("--weights", gen_args.weights, "lo:hi or invlen");
    gen->add_option("--terminals", gen_args.terminals, "uniform or outer");
    gen->add_option("--out", gen_args.out, "output graph file (sidecar <out>.terminals)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time repeated solves on fresh instances");
    bench->add_option("--family", bench_args.family, "grid or delaunay");
    bench->add_option("--sizes", bench_args.sizes, "comma-separated sizes")->required()->delimiter(',');
    bench->add_option("--reps", bench_args.reps, "repetitions per size");
    bench->add_option("--seed", bench_args.seed, "base seed; repetition r uses seed + r");
    bench->add_option("--tracker", bench_args.tracker, "naive, unionfind or both");
    bench->add_option("--task", bench_args.task, "diversion or oddpath");
    bench->add_option("--weights", bench_args.weights, "lo:hi or invlen");
    bench->add_option("--terminals", bench_args.terminals, "uniform or outer");
    bench->add_option("--out", bench_args.out, "CSV output path");

    DiverseArgs diverse_args;
    auto* diverse = app.add_subcommand("diverse", "distinct minimal s-t cuts over every choice of b");
    diverse->add_option("graph", diverse_args.file, "graph file")->required();
    diverse->add_option("--s", diverse_args.s, "source vertex")->required();
    diverse->add_option("--t", diverse_args.t, "target vertex")->required();
    diverse->add_option("--tracker", diverse_args.tracker, "naive or unionfind");
    diverse->add_option("--out", diverse_args.out, "CSV output path (default stdout)");

    OddPathArgs odd_args;
    auto* oddpath = app.add_subcommand("oddpath", "shortest s-t path with an odd or even edge count");
    oddpath->add_option("graph", odd_args.file, "graph file, coordinates optional")->required();
    oddpath->add_option("--s", odd_args.s, "source vertex")->required();
    oddpath->add_option("--t", odd_args.t, "target vertex")->required();
    oddpath->add_option("--parity", odd_args.parity, "odd or even");
    oddpath->add_option("--tracker", odd_args.tracker, "naive or unionfind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*solve) return cmd_solve(solve_args, out);
        if (*gen) return cmd_gen(gen_args, out, err);
        if (*bench) return cmd_bench(bench_args, out);
        if (*diverse) return cmd_diverse(diverse_args, out);
        if (*oddpath) return cmd_oddpath(odd_args, out);
    } catch (const DiversionError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace pdiv::cli

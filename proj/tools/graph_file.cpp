#include "graph_file.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <istream>
#include <ostream>
#include <sstream>

namespace pdiv::cli {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::invalid_argument(fmt::format("line {}: {}", line, what)), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> data_lines(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        std::istringstream ss(text);
        std::vector<std::string> tokens;
        for (std::string tok; ss >> tok;) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

template <class T>
T parse_int(const Line& line, std::size_t i, const char* what) {
    const std::string& tok = line.tokens[i];
    T value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line.number, fmt::format("expected {} but found '{}'", what, tok));
    }
    return value;
}

double parse_real(const Line& line, std::size_t i, const char* what) {
    const std::string& tok = line.tokens[i];
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
        throw ParseError(line.number, fmt::format("expected {} but found '{}'", what, tok));
    }
    return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, fmt::format("expected `{}` ({} fields), found {} fields", shape,
                                                  count, line.tokens.size()));
    }
}

}  // namespace

GraphFile read_graph_file(std::istream& in, bool coords_optional) {
    const std::vector<Line> lines = data_lines(in);
    if (lines.empty()) throw ParseError(1, "missing header `n m`");
    const Line& header = lines.front();
    expect_tokens(header, 2, "n m");
    const auto n = parse_int<std::size_t>(header, 0, "vertex count");
    const auto m = parse_int<std::size_t>(header, 1, "edge count");
    if (n >= (std::size_t{1} << 31)) throw ParseError(header.number, "vertex count too large");

    bool with_coords = true;
    if (coords_optional && lines.size() > 1) with_coords = lines[1].tokens.size() == 2;
    const std::size_t need = 1 + (with_coords ? n : 0) + m;
    if (lines.size() < need) {
        const std::size_t last = lines.back().number;
        throw ParseError(last + 1, fmt::format("file ends early: expected {} data lines after the "
                                               "header, found {}", need - 1, lines.size() - 1));
    }
    if (lines.size() > need) throw ParseError(lines[need].number, "unexpected extra line");

    GraphFile out;
    std::size_t at = 1;
    if (with_coords) {
        std::vector<Point> coords(n);
        for (std::size_t v = 0; v < n; ++v, ++at) {
            const Line& line = lines[at];
            expect_tokens(line, 2, "x y");
            coords[v] = {parse_real(line, 0, "x coordinate"), parse_real(line, 1, "y coordinate")};
        }
        out.coords = std::move(coords);
    }
    const std::size_t first_edge = at;
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i, ++at) {
        const Line& line = lines[at];
        expect_tokens(line, 3, "u v w");
        const auto u = parse_int<VertexId>(line, 0, "vertex id");
        const auto v = parse_int<VertexId>(line, 1, "vertex id");
        edges.push_back({u, v, parse_real(line, 2, "weight")});
    }
    try {
        out.graph = WeightedGraph::build(n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(lines[first_edge + e.edge_index()].number, e.what());
    }
    return out;
}

PlaneGraph read_plane_graph(std::istream& in) {
    GraphFile file = read_graph_file(in, false);
    return rotation_from_coordinates(std::move(file.graph), std::move(*file.coords));
}

void write_graph_file(std::ostream& out, const PlaneGraph& pg) {
    const WeightedGraph& g = pg.graph();
    out << fmt::format("{} {}\n", g.vertex_count(), g.edge_count());
    for (const Point& p : pg.coords()) out << fmt::format("{} {}\n", p.x, p.y);
    for (const Edge& e : g.edges()) out << fmt::format("{} {} {}\n", e.u, e.v, e.w);
}

std::string format_number(double x) {
    std::string s = fmt::format("{}", x);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

}  // namespace pdiv::cli

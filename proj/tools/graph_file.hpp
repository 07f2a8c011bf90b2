#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdiv/graph.hpp"
#include "pdiv/plane.hpp"

namespace pdiv::cli {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parsed text graph: header `n m`, then n lines `x y` (optional when
/// allowed), then m lines `u v w`. Lines starting with `#` and blank lines
/// are skipped.
struct GraphFile {
    WeightedGraph graph;
    std::optional<std::vector<Point>> coords;
};

/// With `coords_optional`, the first data line decides: two tokens means a
/// coordinate block follows, three tokens means edges start immediately.
GraphFile read_graph_file(std::istream& in, bool coords_optional = false);
PlaneGraph read_plane_graph(std::istream& in);
void write_graph_file(std::ostream& out, const PlaneGraph& pg);

/// Shortest round-trip decimal, always with a fraction or exponent ("1.0").
std::string format_number(double x);

}  // namespace pdiv::cli

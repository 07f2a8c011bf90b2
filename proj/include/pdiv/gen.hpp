#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pdiv/graph.hpp"
#include "pdiv/plane.hpp"

namespace pdiv {

/// SplitMix64. Each call advances the state by 0x9E3779B97F4A7C15 and mixes
/// it; see README for the exact output function.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

enum class Family { grid, delaunay };
enum class TerminalPolicy { uniform, outer_face };

std::string_view to_string(Family f) noexcept;

struct WeightSpec {
    double lo = 0.0;
    double hi = 1000.0;
    bool inverse_length = false;  // w = 1 / length instead of uniform draws
};

struct GeneratorConfig {
    Family family = Family::grid;
    std::size_t size = 10;  // N for an N x N grid, point count for Delaunay
    std::uint64_t seed = 1;
    WeightSpec weights;
    TerminalPolicy terminals = TerminalPolicy::uniform;
};

struct Instance {
    PlaneGraph graph;
    VertexId s = 0;
    VertexId t = 0;
    EdgeId b = 0;
};

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Instance generate(const GeneratorConfig& cfg);
Instance gen_grid(const GeneratorConfig& cfg);
Instance gen_delaunay(const GeneratorConfig& cfg);

/// Delaunay points live on a 2^24 x 2^24 lattice so predicates can be exact.
inline constexpr int kLatticeBits = 24;

struct LatticePoint {
    std::int64_t x;
    std::int64_t y;
};

/// Sign of the orientation of (a, b, c): +1 counter-clockwise.
int orient2d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);
/// +1 when d lies strictly inside the circumcircle of the counter-clockwise
/// triangle (a, b, c), 0 on it, -1 outside. Floating-point filter with an
/// exact 128-bit fallback.
int incircle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
             const LatticePoint& d);

/// Counter-clockwise triangles of the Delaunay triangulation (incremental
/// Bowyer-Watson). Points must be distinct and not all collinear.
std::vector<std::array<VertexId, 3>> delaunay_triangles(std::span<const LatticePoint> points);

}  // namespace pdiv

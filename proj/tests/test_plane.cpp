#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pdiv/gen.hpp"
#include "pdiv/plane.hpp"
#include "support/fixtures.hpp"

using namespace pdiv;

namespace {

VertexId head_vertex(const PlaneGraph& pg, DartId d) { return pg.head(d); }

PlaneError::Kind plane_error_kind(auto&& fn) {
    try {
        fn();
    } catch (const PlaneError& e) {
        return e.kind();
    }
    FAIL("expected PlaneError");
    return PlaneError::Kind::bad_rotation;
}

}  // namespace

TEST_CASE("rotation is counter-clockwise from the positive x-axis") {
    const PlaneGraph star = fixtures::plane({{0, 0}, {-1, 0}, {0, 1}, {1, 0}},
                                            {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    std::vector<VertexId> around;
    for (DartId d : star.rotation(0)) around.push_back(head_vertex(star, d));
    CHECK(around == std::vector<VertexId>{3, 2, 1});

    const PlaneGraph single = fixtures::plane({{0, 0}, {1, 0}}, {{0, 1, 1}});
    CHECK(single.rotation(0).size() == 1);
    CHECK(single.rotation(1).size() == 1);

    const PlaneGraph grid = fixtures::unit_grid(3);
    std::vector<VertexId> centre;
    for (DartId d : grid.rotation(4)) centre.push_back(head_vertex(grid, d));
    CHECK(centre == std::vector<VertexId>{5, 7, 3, 1});  // E, N, W, S
}

TEST_CASE("collinear neighbours are ordered by distance") {
    const PlaneGraph pg = fixtures::plane({{0, 0}, {2, 0}, {1, 0}, {0, 1}},
                                          {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}});
    std::vector<VertexId> around;
    for (DartId d : pg.rotation(0)) around.push_back(head_vertex(pg, d));
    CHECK(around == std::vector<VertexId>{2, 1, 3});
}

TEST_CASE("coordinates are validated") {
    CHECK(plane_error_kind([] { fixtures::plane({{0, 0}, {0, 0}}, {{0, 1, 1}}); }) ==
          PlaneError::Kind::coincident_points);
    CHECK(plane_error_kind([] { fixtures::plane({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 1}}); }) ==
          PlaneError::Kind::disconnected_graph);
}

TEST_CASE("face traversal") {
    CHECK(trace_faces(fixtures::triangle()).face_count == 2);
    CHECK(trace_faces(fixtures::four_cycle()).face_count == 2);
    const FaceMap grid = trace_faces(fixtures::unit_grid(3));
    CHECK(grid.face_count == 5);
    std::vector<std::uint32_t> sizes = grid.face_size;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint32_t>{4, 4, 4, 4, 8});

    const FaceMap path = trace_faces(fixtures::plane({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 1}, {1, 2, 1}}));
    CHECK(path.face_count == 1);
    CHECK(path.side_faces[0].first == path.side_faces[0].second);
}

TEST_CASE("a crossing drawing fails the Euler check") {
    // K4 drawn with its two diagonals crossing inside the square.
    const PlaneGraph k4 = fixtures::plane(
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 1}, {1, 3, 1}});
    CHECK(plane_error_kind([&] { trace_faces(k4); }) == PlaneError::Kind::euler_check_failed);
    CHECK(plane_error_kind([&] { verify_straight_line_embedding(k4); }) ==
          PlaneError::Kind::crossing_edges);
    CHECK_NOTHROW(verify_straight_line_embedding(fixtures::unit_grid(4)));
}

TEST_CASE("too many edges for a plane graph") {
    // K5 drawn on a regular pentagon: 10 edges > 3*5-6.
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) {
        const double a = 2 * M_PI * i / 5;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 5; ++u) {
        for (VertexId v = u + 1; v < 5; ++v) edges.push_back({u, v, 1});
    }
    const PlaneGraph k5 = fixtures::plane(pts, edges);
    CHECK(plane_error_kind([&] { trace_faces(k5); }) == PlaneError::Kind::too_many_edges);
}

TEST_CASE("dual construction") {
    SUBCASE("triangle merges three parallels into the cheapest") {
        const PlaneGraph tri = fixtures::plane({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 3}, {1, 2, 1}, {0, 2, 2}});
        const DualGraph d = compute_dual(tri);
        CHECK(d.face_count == 2);
        REQUIRE(d.edges.size() == 1);
        CHECK(d.edges[0].w == 1.0);
        CHECK(d.edges[0].primal == 1);
        CHECK(d.dual_of(1) == EdgeId{0});
        CHECK_FALSE(d.dual_of(0));
    }
    SUBCASE("bridges vanish") {
        const DualGraph d = compute_dual(fixtures::plane({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 1}, {1, 2, 1}}));
        CHECK(d.face_count == 1);
        CHECK(d.edges.empty());
    }
    SUBCASE("3x3 grid") {
        const PlaneGraph grid = fixtures::unit_grid(3);
        const FaceMap faces = trace_faces(grid);
        const DualGraph all = compute_dual(grid.graph(), faces, std::vector<std::uint8_t>(12, 1));
        CHECK(all.face_count == 5);
        CHECK(all.candidate_count == 12);
        CHECK(all.edges.size() == 8);

        // Boundary edges separate a square from the outer face (the one of size 8).
        const auto outer = static_cast<FaceId>(
            std::max_element(faces.face_size.begin(), faces.face_size.end()) - faces.face_size.begin());
        std::size_t touching_outer = 0;
        for (const auto& [a, b] : faces.side_faces) touching_outer += (a == outer || b == outer);
        CHECK(touching_outer == 8);

        const DualGraph blanket = compute_dual(grid);
        CHECK(blanket.edges.size() == 8);  // four inner adjacencies + four square-to-outer classes
        CHECK(is_connected(blanket.as_graph()));
    }
    SUBCASE("marks keep classes apart and b can be excluded") {
        const PlaneGraph cyc = fixtures::four_cycle();
        const FaceMap faces = trace_faces(cyc);
        const std::vector<std::uint8_t> marked{1, 0, 1, 0};
        const DualGraph d = compute_dual(cyc.graph(), faces, marked, EdgeId{0});
        CHECK(d.edges.size() == 2);
        CHECK(std::count_if(d.edges.begin(), d.edges.end(), [](const DualEdge& e) { return e.marked; }) == 1);
        CHECK_FALSE(d.dual_of(0));
        CHECK_THROWS(d.as_graph());
    }
}

TEST_CASE("Euler holds on generated instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.family = seed % 2 ? Family::grid : Family::delaunay;
        cfg.size = seed % 2 ? 2 + seed : 3 + 10 * seed;
        const Instance inst = generate(cfg);
        const FaceMap faces = trace_faces(inst.graph);
        const auto& g = inst.graph.graph();
        CHECK(long(g.vertex_count()) - long(g.edge_count()) + long(faces.face_count) == 2);
    }
}

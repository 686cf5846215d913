#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qdist/regularizer.hpp"

using namespace qdist;

namespace {

// Moser spindle: 7 vertices, 11 unit edges, built from two unit rhombi with
// a common vertex, rotated so the far tips are unit apart.
PlaneEmbedding moser_spindle() {
    const double h = std::sqrt(3.0) / 2.0;  // |tip| = sqrt(3)
    // One rhombus with hub at the origin: vertices at angles +-30 degrees
    // and the tip straight ahead at distance sqrt(3).
    auto rhombus = [&](double phi) {
        std::vector<PlanePoint> v;
        v.push_back({std::cos(phi + M_PI / 6.0), std::sin(phi + M_PI / 6.0)});
        v.push_back({std::cos(phi - M_PI / 6.0), std::sin(phi - M_PI / 6.0)});
        v.push_back({2.0 * h * std::cos(phi), 2.0 * h * std::sin(phi)});
        return v;
    };
    // tips at distance sqrt(3) from the hub; angle between tips so that the
    // tip separation is exactly 1: 2 sqrt(3) sin(delta/2) = 1
    const double delta = 2.0 * std::asin(0.5 / std::sqrt(3.0));
    auto r1 = rhombus(0.0), r2 = rhombus(delta);
    PlaneEmbedding g;
    g.coords = {{0.0, 0.0}, r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
    g.graph.vertex_count = 7;
    g.graph.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2},
                     {0, 4}, {0, 5}, {4, 6}, {5, 6}, {4, 5}, {3, 6}};
    g.update_worst_deviation();
    return g;
}

}  // namespace

TEST_CASE("PlaneEmbedding validation") {
    PlaneEmbedding g;
    g.graph.vertex_count = 2;
    g.graph.edges = {{0, 1}};
    g.coords = {{0.0, 0.0}, {1.0, 0.0}};
    CHECK_NOTHROW(g.validate());
    g.update_worst_deviation();
    CHECK(g.worst_edge_deviation == 0.0);

    g.coords[1] = {1.5, 0.0};
    CHECK_THROWS_AS(g.validate(), std::domain_error);

    PlaneEmbedding coincide;
    coincide.graph.vertex_count = 2;
    coincide.coords = {{0.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(coincide.validate(), std::domain_error);
}

TEST_CASE("the spindle fixture is a valid unit-distance graph") {
    PlaneEmbedding g = moser_spindle();
    CHECK_NOTHROW(g.validate());
    CHECK(g.worst_edge_deviation < 1e-12);
    CHECK(g.graph.edges.size() == 11);
}

TEST_CASE("base_regular_graph is r-regular with 2^r vertices") {
    for (std::size_t r = 1; r <= 6; ++r) {
        CAPTURE(r);
        PlaneEmbedding g = base_regular_graph(r);
        CHECK(g.graph.vertex_count == (std::size_t{1} << r));
        CHECK_NOTHROW(g.validate());
        for (auto d : g.degrees()) CHECK(d == r);
        CHECK(g.worst_edge_deviation <= g.tolerance);
    }
    CHECK_THROWS_AS(base_regular_graph(0), std::domain_error);
}

TEST_CASE("regular_supergraph on a path") {
    PlaneEmbedding path;
    path.graph.vertex_count = 3;
    path.graph.edges = {{0, 1}, {1, 2}};
    path.coords = {{0.0, 0.0}, {1.0, 0.0}, {1.5, std::sqrt(3.0) / 2.0}};

    for (std::size_t r : {2, 3, 4}) {
        CAPTURE(r);
        PlaneEmbedding h = regular_supergraph(path, r, 12345);
        CHECK_NOTHROW(h.validate());
        for (auto d : h.degrees()) CHECK(d == r);
        CHECK(h.worst_edge_deviation <= 1e-9);
        // supergraph: original coordinates and edges preserved
        for (std::size_t v = 0; v < 3; ++v) {
            CHECK(h.coords[v][0] == path.coords[v][0]);
            CHECK(h.coords[v][1] == path.coords[v][1]);
        }
        for (auto [u, v] : path.graph.edges) CHECK(h.graph.has_edge(u, v));
    }
}

TEST_CASE("regular_supergraph handles degree-1 targets and isolated vertices") {
    PlaneEmbedding dots;
    dots.graph.vertex_count = 2;
    dots.coords = {{0.0, 0.0}, {5.0, 0.0}};
    PlaneEmbedding h = regular_supergraph(dots, 1, 7);
    for (auto d : h.degrees()) CHECK(d == 1);
    CHECK_NOTHROW(h.validate());
}

TEST_CASE("regular_supergraph regularizes the spindle to degree 4") {
    PlaneEmbedding g = moser_spindle();
    PlaneEmbedding h = regular_supergraph(g, 4, 99);
    CHECK_NOTHROW(h.validate());
    for (auto d : h.degrees()) CHECK(d == 4);
    CHECK(h.worst_edge_deviation <= 1e-9);
    for (auto [u, v] : g.graph.edges) CHECK(h.graph.has_edge(u, v));
}

TEST_CASE("regular_supergraph rejects r below the maximum degree") {
    PlaneEmbedding g = moser_spindle();  // max degree 4
    CHECK_THROWS_AS(regular_supergraph(g, 3, 1), std::domain_error);
}

TEST_CASE("regular_supergraph is deterministic for a fixed seed") {
    PlaneEmbedding path;
    path.graph.vertex_count = 2;
    path.graph.edges = {{0, 1}};
    path.coords = {{0.0, 0.0}, {1.0, 0.0}};
    PlaneEmbedding a = regular_supergraph(path, 3, 42);
    PlaneEmbedding b = regular_supergraph(path, 3, 42);
    REQUIRE(a.graph.vertex_count == b.graph.vertex_count);
    REQUIRE(a.coords.size() == b.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        CHECK(a.coords[i][0] == b.coords[i][0]);
        CHECK(a.coords[i][1] == b.coords[i][1]);
    }
    CHECK(a.graph.edges == b.graph.edges);
}

TEST_CASE("render_svg emits one line per edge and one circle per vertex") {
    PlaneEmbedding g = base_regular_graph(2);
    std::string svg = render_svg(g);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t lines = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(lines == g.graph.edges.size());
    CHECK(circles == g.graph.vertex_count);
}

#include <catch2/catch_amalgamated.hpp>

#include "qdist/distance_graphs.hpp"
#include "qdist/lattice_geom.hpp"

using namespace qdist;

TEST_CASE("Graph validation") {
    Graph g = Graph::complete_multipartite({1, 2});
    CHECK(g.vertex_count == 3);
    CHECK(g.edges.size() == 2);
    CHECK_NOTHROW(g.validate());
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));

    Graph loop{1, {{0, 0}}, std::nullopt};
    CHECK_THROWS_AS(loop.validate(), std::domain_error);
    Graph oob{1, {{0, 1}}, std::nullopt};
    CHECK_THROWS_AS(oob.validate(), std::domain_error);

    // descriptor that does not match the edge set
    Graph bad = Graph::complete_multipartite({2, 2});
    bad.edges.pop_back();
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    Graph k4 = Graph::complete(4);
    CHECK(k4.vertex_count == 4);
    CHECK(k4.edges.size() == 6);
    CHECK_NOTHROW(k4.validate());
}

TEST_CASE("verify_embedding: exact edge checks") {
    // unit square in Q^2 with r = 1 on the 4-cycle
    Embedding e;
    e.graph = Graph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::nullopt};
    e.n = 2;
    e.r = Rational(1);
    e.coords = {QVec{0, 0}, QVec{1, 0}, QVec{1, 1}, QVec{0, 1}};
    auto rep = verify_embedding(e);
    CHECK(rep.pass);
    CHECK(rep.edges_pass);
    CHECK(rep.edges.size() == 4);
    for (const auto& c : rep.edges) {
        CHECK(c.ok);
        CHECK(c.actual == Rational(1));
    }

    e.coords[2] = QVec{2, 1};
    auto bad = verify_embedding(e);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.edges_pass);
    int failures = 0;
    for (const auto& c : bad.edges) {
        if (!c.ok) ++failures;
    }
    CHECK(failures == 2);
}

TEST_CASE("verify_embedding: faithful mode catches non-edges at distance") {
    // path 0-1-2 on a unit equilateral triangle: the chord 0-2 is also at
    // the edge distance, so faithful verification must flag it.
    auto tri = embed_triangle_q4({Rational(1), Rational(1), Rational(1)});
    REQUIRE(tri);
    Embedding e;
    e.graph = Graph{3, {{0, 1}, {1, 2}}, std::nullopt};
    e.n = 4;
    e.r = Rational(1);
    e.coords = {tri->origin, tri->p1, tri->p2};
    CHECK(verify_embedding(e, false).pass);
    auto rep = verify_embedding(e, true);
    CHECK(rep.edges_pass);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.nonedges_at_r.size() == 1);
    CHECK(rep.nonedges_at_r[0].u == 0);
    CHECK(rep.nonedges_at_r[0].v == 2);
}

TEST_CASE("verify_embedding input contract") {
    Embedding e;
    e.graph = Graph{2, {{0, 1}}, std::nullopt};
    e.n = 2;
    e.r = Rational(1);
    e.coords = {QVec{0, 0}};
    CHECK_THROWS_AS(verify_embedding(e), std::domain_error);
    e.coords = {QVec{0, 0}, QVec{1, 0, 0}};
    CHECK_THROWS_AS(verify_embedding(e), std::domain_error);
}

TEST_CASE("multipartite_dimension") {
    CHECK(multipartite_dimension(2, 0, 0) == 1);  // K_2 on a line
    CHECK(multipartite_dimension(0, 1, 1) == 3);  // K_{2,3}
    CHECK(multipartite_dimension(1, 0, 2) == 5);  // K_{1,3,3}
    CHECK(multipartite_dimension(3, 0, 0) == 2);  // triangle in the plane
    CHECK(multipartite_dimension(1, 1, 0) == 1);  // K_{1,2}, a path on a line
    CHECK(multipartite_dimension(0, 0, 2) == 4);  // K_{3,3}
    CHECK(multipartite_dimension(1, 0, 1) == 2);  // K_{1,3}
    CHECK(multipartite_dimension(0, 2, 0) == 2);  // K_{2,2}, a rhombus
    CHECK(multipartite_dimension(2, 1, 0) == 2);
    CHECK_THROWS_AS(multipartite_dimension(1, 0, 0), std::domain_error);
}

TEST_CASE("schoenberg_c1") {
    CHECK(schoenberg_c1(1) == 2);   // n = 1 (mod 4), 2 = 1 + 1
    CHECK(schoenberg_c1(2) == 2);   // 3 not a perfect square
    CHECK(schoenberg_c1(3) == 4);   // n = 3 (mod 4)
    CHECK(schoenberg_c1(4) == 4);   // 5 not a perfect square
    CHECK(schoenberg_c1(5) == 5);   // 6 not a sum of two squares
    CHECK(schoenberg_c1(7) == 8);
    CHECK(schoenberg_c1(8) == 9);   // 9 = 3^2
    CHECK(schoenberg_c1(9) == 10);  // 10 = 9 + 1
    CHECK(schoenberg_c1(24) == 25);
    CHECK_THROWS_AS(schoenberg_c1(0), std::domain_error);
}

TEST_CASE("clique_search_bruteforce") {
    // unit-distance points of Z^2: omega = 2
    auto w2 = clique_search_bruteforce(2, Rational(1), 1);
    CHECK(w2.size == 2);

    // sqrt(2) in Z^2 still gives only an edge
    CHECK(clique_search_bruteforce(2, Rational(2), 1).size == 2);

    // r with no representation at all: best clique is a single point
    auto none = clique_search_bruteforce(2, Rational(3), 1);
    CHECK(none.size == 1);
    CHECK(none.points.size() == 1);

    // K_4 at squared distance 2 inside {0,1}^3 shifted: e.g. (0,0,0),
    // (1,1,0), (1,0,1), (0,1,1)
    auto w4 = clique_search_bruteforce(3, Rational(2), 1);
    CHECK(w4.size == 4);

    // witness points really are pairwise at the target distance
    REQUIRE(w4.points.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            CHECK(squared_dist(w4.points[i], w4.points[j]) == Rational(2));
        }
    }

    // half-integer grid: equilateral triangle at r = 1 needs denominator 2
    // in Q^4 (e.g. the regular simplex corner slice)
    auto w = clique_search_bruteforce(4, Rational(1), 1, 2);
    CHECK(w.size >= 4);
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        for (std::size_t j = i + 1; j < w.points.size(); ++j) {
            CHECK(squared_dist(w.points[i], w.points[j]) == Rational(1));
        }
    }

    CHECK_THROWS_AS(clique_search_bruteforce(0, Rational(1), 1), std::domain_error);
    CHECK_THROWS_AS(clique_search_bruteforce(2, Rational(1), 0), std::domain_error);
}

TEST_CASE("clique_search_bruteforce is deterministic") {
    auto a = clique_search_bruteforce(3, Rational(2), 1);
    auto b = clique_search_bruteforce(3, Rational(2), 1);
    CHECK(a.size == b.size);
    CHECK(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
}

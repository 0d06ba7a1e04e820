#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "capax/builtins.hpp"
#include "capax/graph.hpp"
#include "capax/graph_io.hpp"
#include "test_util.hpp"

using namespace capax;

TEST_CASE("vertex labels use the leftmost coordinate as most significant bit") {
    const auto label = VertexLabel::from_bits({1, 0, 0, 1, 0});
    CHECK(label.value == 18);
    CHECK(label.bits() == std::vector<int>{1, 0, 0, 1, 0});
    for (std::uint32_t v = 0; v < 32; ++v) {
        VertexLabel l{5, v};
        CHECK(VertexLabel::from_bits(l.bits()).value == v);
    }
    CHECK(hamming_distance(18, 14) == 3);
}

TEST_CASE("vertex label rejects non-binary coordinates") {
    CHECK_THROWS_AS(VertexLabel::from_bits({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabel::from_bits({}), std::invalid_argument);
}

TEST_CASE("hamming graph of the example distances") {
    const Graph g = hamming_graph(5, {1, 2});
    CHECK(g.vertex_count() == 32);
    int degree = 0;
    CHECK(g.is_regular(&degree));
    CHECK(degree == 15);
    CHECK(g.edge_count() == 240);
}

TEST_CASE("hamming graph with empty distance set is edgeless") {
    const Graph g = hamming_graph(5, {});
    CHECK(g.vertex_count() == 32);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("3-cube against a brute-force distance scan") {
    const Graph g = hamming_graph(3, {1});
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    int degree = 0;
    CHECK(g.is_regular(&degree));
    CHECK(degree == 3);
    for (std::uint32_t u = 0; u < 8; ++u)
        for (std::uint32_t v = 0; v < 8; ++v)
            CHECK(g.adjacent(u, v) == (hamming_distance(u, v) == 1));
    // Bipartite: all edges cross the parity classes.
    for (std::uint32_t u = 0; u < 8; ++u)
        for (std::uint32_t v = u + 1; v < 8; ++v)
            if (g.adjacent(u, v))
                CHECK(std::popcount(u) % 2 != std::popcount(v) % 2);
}

TEST_CASE("hamming graph argument validation") {
    CHECK_THROWS_AS(hamming_graph(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(hamming_graph(17, {1}), std::invalid_argument);
    CHECK_THROWS_AS(hamming_graph(4, {5}), std::invalid_argument);
    CHECK_THROWS_AS(hamming_graph(4, {0}), std::invalid_argument);
}

TEST_CASE("hamming graph degrees equal the binomial sum") {
    std::mt19937 rng(7);
    for (int m = 1; m <= 8; ++m) {
        std::vector<int> distances;
        for (int d = 1; d <= m; ++d)
            if (rng() % 2) distances.push_back(d);
        const Graph g = hamming_graph(m, distances);
        BigInt expected = 0;
        for (int d : distances) expected += binomial(m, d);
        for (int u = 0; u < g.vertex_count(); ++u)
            REQUIRE(BigInt(g.degree(u)) == expected);
    }
}

TEST_CASE("complement of the example graph is 16-regular") {
    const Graph gc = complement(hamming_graph(5, {1, 2}));
    int degree = 0;
    CHECK(gc.is_regular(&degree));
    CHECK(degree == 16);
}

TEST_CASE("complement is an involution and edge counts add up") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Graph g = testutil::random_graph(n, 0.4, rng);
        const Graph gc = complement(g);
        CHECK(complement(gc) == g);
        CHECK(g.edge_count() + gc.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("complement of the edgeless graph is complete") {
    const Graph k4 = complement(empty_graph(4));
    int degree = 0;
    CHECK(k4.is_regular(&degree));
    CHECK(degree == 3);
}

TEST_CASE("strong product with K1 is the identity") {
    const Graph g = hamming_graph(3, {1, 3});
    CHECK(strong_product(complete_graph(1), g) == g);
}

TEST_CASE("strong square of the example graph") {
    const Graph gp = hamming_graph(5, {1, 2});
    const Graph product = strong_product(gp, gp);
    CHECK(product.vertex_count() == 1024);
    int degree = 0;
    CHECK(product.is_regular(&degree));
    CHECK(degree == 255);  // (15+1)*(15+1)-1
    // ((00000),(00000)) and ((00001),(00011)): both coordinates adjacent.
    CHECK(product.adjacent(0, 1 * 32 + 3));
}

TEST_CASE("strong product adjacency matches the coordinate conditions") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const int ng = 1 + static_cast<int>(rng() % 8);
        const int nh = 1 + static_cast<int>(rng() % 8);
        const Graph g = testutil::random_graph(ng, 0.5, rng);
        const Graph h = testutil::random_graph(nh, 0.5, rng);
        const Graph p = strong_product(g, h);
        REQUIRE(p.vertex_count() == ng * nh);
        for (int a = 0; a < p.vertex_count(); ++a)
            for (int b = 0; b < p.vertex_count(); ++b)
                REQUIRE(p.adjacent(a, b) == testutil::strong_product_adjacent_oracle(g, h, a, b));
    }
}

TEST_CASE("strong product commutes up to the coordinate swap") {
    std::mt19937 rng(17);
    const Graph g = testutil::random_graph(5, 0.5, rng);
    const Graph h = testutil::random_graph(7, 0.4, rng);
    const Graph gh = strong_product(g, h);
    const Graph hg = strong_product(h, g);
    for (int a = 0; a < gh.vertex_count(); ++a)
        for (int b = 0; b < gh.vertex_count(); ++b) {
            const int swapped_a = (a % 7) * 5 + a / 7;
            const int swapped_b = (b % 7) * 5 + b / 7;
            REQUIRE(gh.adjacent(a, b) == hg.adjacent(swapped_a, swapped_b));
        }
}

TEST_CASE("strong product respects the size cap") {
    CHECK_THROWS_AS(strong_product(complete_graph(2), complete_graph(2), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(strong_power(complete_graph(4), 3, 60), std::invalid_argument);
}

TEST_CASE("strong powers") {
    const Graph g = hamming_graph(3, {1});
    CHECK(strong_power(g, 1) == g);

    const Graph k4 = strong_power(complete_graph(2), 2);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    const Graph gp = hamming_graph(5, {1, 2});
    CHECK(strong_power(gp, 2) == strong_product(gp, gp));
    CHECK_THROWS_AS(strong_power(gp, 0), std::invalid_argument);
}

TEST_CASE("adjacency matrix presentation") {
    const SymMatrix k2 = adjacency_matrix(complete_graph(2));
    CHECK(k2(0, 0) == 0.0);
    CHECK(k2(0, 1) == 1.0);
    CHECK(k2(1, 0) == 1.0);
    CHECK(k2(1, 1) == 0.0);

    const SymMatrix gp = adjacency_matrix(hamming_graph(5, {1, 2}));
    for (int i = 0; i < 32; ++i) {
        double row_sum = 0;
        for (int j = 0; j < 32; ++j) row_sum += gp(i, j);
        REQUIRE(row_sum == 15.0);
    }

    // Distance-1 pairs of {0,1}^2 form the 4-cycle 0-1-3-2.
    const SymMatrix c4 = adjacency_matrix(hamming_graph(2, {1}));
    const Graph cycle(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE(c4(i, j) == (cycle.adjacent(i, j) ? 1.0 : 0.0));
}

TEST_CASE("graph constructor enforces simple symmetric adjacency") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    std::vector<Bitset> rows(2, Bitset(2));
    rows[0].set(1);  // missing the mirrored bit
    CHECK_THROWS_AS(Graph(std::move(rows)), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    CHECK(parse_edge_list("2\n0 1\n") == complete_graph(2));
    const Graph gp = hamming_graph(5, {1, 2});
    CHECK(parse_edge_list(emit_edge_list(gp)) == gp);

    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1 junk\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("-3\n"), std::invalid_argument);
}

TEST_CASE("graph6 payload for a known 5-vertex graph") {
    // 'D' encodes n=5; the bits of "?{" put edges exactly on pairs (*,4).
    const Graph star = parse_graph6("D?{");
    CHECK(star.vertex_count() == 5);
    CHECK(star.edge_count() == 4);
    const Graph expected(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(star == expected);
    CHECK(emit_graph6(expected) == "D?{");
}

TEST_CASE("graph6 round trips and agrees with the edge list format") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = testutil::random_graph(n, 0.5, rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
        CHECK(parse_graph(emit_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList) ==
              parse_graph(emit_graph(g, GraphFormat::Graph6), GraphFormat::Graph6));
    }
    // Long form for n > 62.
    const Graph big = cycle_graph(100);
    CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);   // truncated payload
    CHECK_THROWS_AS(parse_graph6("D?{{"), std::invalid_argument); // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D?\x1f"), std::invalid_argument);
}

TEST_CASE("builtin graph names") {
    CHECK(builtin_graph("hamming:5:1,2") == hamming_graph(5, {1, 2}));
    CHECK(builtin_graph("cycle:5") == cycle_graph(5));
    CHECK(builtin_graph("empty:4") == empty_graph(4));
    CHECK(builtin_graph("complete:3") == complete_graph(3));

    const Graph petersen = builtin_graph("petersen");
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    int degree = 0;
    CHECK(petersen.is_regular(&degree));
    CHECK(degree == 3);

    CHECK_THROWS_AS(builtin_graph("dodecahedron"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("cycle:x"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("hamming:5"), std::invalid_argument);
}

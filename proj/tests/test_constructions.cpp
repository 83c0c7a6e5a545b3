#include <catch2/catch_amalgamated.hpp>

#include "c4t/constructions.hpp"
#include "oracles.hpp"

using namespace c4t;

TEST_CASE("threshold values", "[constructions]") {
    CHECK(threshold(8).value == 10);   // 21 - 15 + 3 + 1
    CHECK(threshold(12).value == 23);  // 55 - 36 + 4.5 - 0.5
    CHECK(threshold(16).value == 46);  // 105 - 66 + 6 + 1
    CHECK(threshold(8).parity_case == "8N");
    CHECK(threshold(12).parity_case == "4N\\8N");
    CHECK_THROWS_AS(threshold(6), std::invalid_argument);
    CHECK_THROWS_AS(threshold(0), std::invalid_argument);
}

TEST_CASE("threshold arithmetic identities", "[constructions]") {
    for (int n = 4; n <= 400; n += 4) {
        const std::int64_t t = threshold(n).value;
        // independent route: 8*t as one integer expression
        const std::int64_t eight_t = 4ll * (n - 1) * (n - 2) - 4ll * (3 * n / 4) * (3 * n / 4 - 1)
                                     + 3ll * n + ((n % 8 == 0) ? 8 : -4);
        REQUIRE(8 * t == eight_t);
    }
    // ratio against binom(n,2) approaches 7/16
    for (int n = 200; n <= 400; n += 4) {
        double ratio = static_cast<double>(threshold(n).value) / static_cast<double>(binom(n, 2));
        REQUIRE(std::abs(ratio - 7.0 / 16.0) < 0.02);
    }
}

TEST_CASE("H0 at n = 8", "[constructions]") {
    LabeledConstruction h0 = build_H0(8);
    CHECK(h0.part_A == VertexSet{0});
    CHECK(h0.part_B.size() == 7);
    CHECK(h0.hypergraph.edge_count() == 28);  // C(8,3) - C(7,3) + 7
    CHECK(h0.hypergraph.min_degree1() == 9);
    CHECK(h0.hypergraph.min_degree1() == threshold(8).value - 1);

    // every vertex of B has degree 9 and a 9-pair link graph
    for (Vertex v : h0.part_B) {
        CHECK(h0.hypergraph.deg_set({v}) == 9);
        CHECK(h0.hypergraph.link_graph(v).edge_count() == 9);
        CHECK(oracle::brute_deg(h0.hypergraph, {v}) == 9);
    }
    // B spans no copy of C4
    CHECK(h0.hypergraph.is_c4_free(h0.part_B));
    CHECK_FALSE(h0.hypergraph.is_c4_free(sorted_union(h0.part_A, {1, 2, 3})));

    CHECK_THROWS_AS(build_H0(12), std::invalid_argument);
    CHECK_THROWS_AS(build_H0(4), std::invalid_argument);
}

TEST_CASE("H1 at n = 12", "[constructions]") {
    LabeledConstruction h1 = build_H1(12);
    CHECK(h1.part_A.size() == 2);
    CHECK(h1.part_B.size() == 10);
    CHECK(h1.hypergraph.min_degree1() == 22);
    CHECK(h1.hypergraph.min_degree1() == threshold(12).value - 1);
    CHECK(h1.hypergraph.is_c4_free(h1.part_B));

    // inside B every vertex has degree exactly 3 (Steiner(13) degree 6 minus
    // the three triples lost to the removed edge's points)
    InducedSubgraph b = induced_subgraph(h1.hypergraph, h1.part_B);
    for (int v = 0; v < b.graph.vertex_count(); ++v) CHECK(b.graph.deg1(v) == 3);

    CHECK_THROWS_AS(build_H1(8), std::invalid_argument);
    CHECK_THROWS_AS(build_H1(16), std::invalid_argument);
}

TEST_CASE("H0/H1 sit one below the threshold", "[constructions]") {
    for (int n = 8; n <= 48; n += 4) {
        CAPTURE(n);
        LabeledConstruction c = (n % 8 == 0) ? build_H0(n) : build_H1(n);
        REQUIRE(static_cast<int>(c.part_A.size()) == n / 4 - 1);
        REQUIRE(c.hypergraph.min_degree1() == threshold(n).value - 1);
        REQUIRE(c.hypergraph.is_c4_free(c.part_B));
    }
}

TEST_CASE("every triple meeting A is present", "[constructions]") {
    for (int n : {8, 12, 16}) {
        LabeledConstruction c = (n % 8 == 0) ? build_H0(n) : build_H1(n);
        const auto& h = c.hypergraph;
        for_each_k_subset(n, 3, [&](const std::vector<int>& t) {
            bool meets_a = t[0] < static_cast<int>(c.part_A.size());
            if (meets_a) REQUIRE(h.has_edge(t[0], t[1], t[2]));
        });
    }
}

TEST_CASE("two cliques", "[constructions]") {
    LabeledConstruction tc = two_cliques(12);
    CHECK(tc.hypergraph.min_degree1() == 10);  // C(5,2)
    CHECK(tc.part_A.size() == 6);
    CHECK(tc.part_B.size() == 6);
    // no edge crosses the parts
    for (const auto& e : tc.hypergraph.edges()) {
        bool in_a = contains_sorted(tc.part_A, e[0]);
        CHECK(contains_sorted(in_a ? tc.part_A : tc.part_B, e[2]));
    }
    CHECK_THROWS_AS(two_cliques(9), std::invalid_argument);
    CHECK_THROWS_AS(two_cliques(6), std::invalid_argument);

    LabeledConstruction big = two_cliques(16);
    CHECK(big.hypergraph.min_degree1() == binom(7, 2));
}

#include <catch2/catch_amalgamated.hpp>

#include "c4t/steiner.hpp"
#include "oracles.hpp"

using namespace c4t;

namespace {

// Test-side pair-coverage oracle, separate from the library's validator.
bool every_pair_exactly_once(const SteinerSystem& s) {
    std::vector<std::vector<int>> cnt(static_cast<std::size_t>(s.m),
                                      std::vector<int>(static_cast<std::size_t>(s.m), 0));
    for (const auto& t : s.triples) {
        ++cnt[t[0]][t[1]];
        ++cnt[t[0]][t[2]];
        ++cnt[t[1]][t[2]];
    }
    for (int a = 0; a < s.m; ++a)
        for (int b = a + 1; b < s.m; ++b)
            if (cnt[a][b] != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("feasibility residues", "[steiner]") {
    CHECK_THROWS_AS(steiner(4), std::invalid_argument);
    CHECK_THROWS_AS(steiner(5), std::invalid_argument);
    CHECK_THROWS_AS(steiner(6), std::invalid_argument);
    CHECK_THROWS_AS(steiner(11), std::invalid_argument);
    CHECK_THROWS_AS(steiner(1), std::invalid_argument);
    CHECK(steiner_feasible(7));
    CHECK(steiner_feasible(9));
    CHECK_FALSE(steiner_feasible(8));
}

TEST_CASE("order 7 and 9 systems", "[steiner]") {
    SteinerSystem s7 = steiner(7);
    CHECK(s7.triples.size() == 7);
    Hypergraph3 h7 = s7.to_hypergraph();
    for (int v = 0; v < 7; ++v) CHECK(h7.deg1(v) == 3);
    CHECK(every_pair_exactly_once(s7));

    SteinerSystem s9 = steiner(9);
    CHECK(s9.triples.size() == 12);
    Hypergraph3 h9 = s9.to_hypergraph();
    for (int v = 0; v < 9; ++v) CHECK(h9.deg1(v) == 4);
    CHECK(every_pair_exactly_once(s9));
}

TEST_CASE("all feasible orders up to 99", "[steiner]") {
    for (int m = 3; m <= 99; ++m) {
        if (!steiner_feasible(m)) continue;
        CAPTURE(m);
        SteinerSystem s = steiner(m);
        REQUIRE(static_cast<std::int64_t>(s.triples.size()) == binom(m, 2) / 3);
        REQUIRE(every_pair_exactly_once(s));
        REQUIRE(is_valid_steiner(s));
        Hypergraph3 h = s.to_hypergraph();
        for (int v = 0; v < m; ++v) REQUIRE(h.deg1(v) == (m - 1) / 2);
        REQUIRE(h.is_c4_free());
    }
}

#pragma once

// Brute-force oracles used by the test suites.  Everything here recomputes
// answers from the edge list alone, independent of the library's indexed
// query paths, so a test that compares the two genuinely cross-checks them.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "c4t/hypergraph.hpp"

namespace oracle {

using c4t::FourSet;
using c4t::Hypergraph3;
using c4t::Triple;
using c4t::Vertex;

inline std::int64_t brute_deg(const Hypergraph3& h, const std::vector<Vertex>& s) {
    std::int64_t d = 0;
    for (const auto& e : h.edges()) {
        bool all = true;
        for (Vertex v : s) all = all && (e[0] == v || e[1] == v || e[2] == v);
        if (all) ++d;
    }
    return d;
}

// Direct two-triple pattern match: some pair of distinct edges lies inside q.
inline bool brute_spans_c4(const Hypergraph3& h, const FourSet& q) {
    const auto& es = h.edges();
    auto inside = [&](const Triple& t) {
        for (Vertex v : t)
            if (v != q[0] && v != q[1] && v != q[2] && v != q[3]) return false;
        return true;
    };
    int found = 0;
    for (const auto& e : es)
        if (inside(e) && ++found >= 2) return true;
    return false;
}

inline bool brute_c4_free(const Hypergraph3& h, const std::vector<Vertex>& s) {
    if (s.size() < 4) return true;
    bool free = true;
    c4t::for_each_k_subset_of(s, 4, [&](const std::vector<int>& q) {
        if (brute_spans_c4(h, FourSet{q[0], q[1], q[2], q[3]})) free = false;
    });
    return free;
}

// Exhaustive subset scan; only sensible for small n.
inline std::vector<Vertex> brute_max_c4_free_set(const Hypergraph3& h) {
    const int n = h.vertex_count();
    std::vector<Vertex> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (s.size() > best.size() && brute_c4_free(h, s)) best = s;
    }
    return best;
}

// Perfect-tiling oracle for n = 8: checks all 35 ways to split the vertex
// set into two 4-sets.
inline bool naive_perfect_tiling_8(const Hypergraph3& h) {
    if (h.vertex_count() != 8) throw std::invalid_argument("oracle is for n = 8");
    bool found = false;
    c4t::for_each_k_subset(8, 4, [&](const std::vector<int>& half) {
        if (half[0] != 0) return;  // fix vertex 0 to avoid double counting
        std::vector<int> other;
        for (int v = 0; v < 8; ++v)
            if (!std::count(half.begin(), half.end(), v)) other.push_back(v);
        FourSet q1{half[0], half[1], half[2], half[3]};
        FourSet q2{other[0], other[1], other[2], other[3]};
        if (brute_spans_c4(h, q1) && brute_spans_c4(h, q2)) found = true;
    });
    return found;
}

// Deterministic random hypergraph; raw engine draws, no std distributions,
// so results match across standard libraries.
inline Hypergraph3 random_hypergraph(int n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    auto coin = [&]() { return rng() < p * 4294967296.0; };
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (coin()) edges.push_back(Triple{a, b, c});
    return Hypergraph3(n, std::move(edges));
}

}  // namespace oracle

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "c4t/hypergraph.hpp"
#include "c4t/steiner.hpp"

// The exact vertex-degree threshold for perfect C4-tilings and the two
// families of graphs that sit one below it, plus the two-clique lower-bound
// construction for the absorption constant.

namespace c4t {

struct ThresholdValue {
    int n = 0;
    std::int64_t value = 0;
    std::string parity_case;  // "8N" or "4N\\8N"
};

// binom(n-1,2) - binom(3n/4,2) + 3n/8 + c(n), with c(n) = 1 when 8 | n and
// -1/2 otherwise.  The half-integers cancel, so the value is an integer;
// computed over doubled integers to keep every intermediate exact.
inline ThresholdValue threshold(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("threshold: n must be a positive multiple of 4");
    const std::int64_t nn = n;
    std::int64_t doubled = (nn - 1) * (nn - 2)            // 2*binom(n-1,2)
                           - (3 * nn / 4) * (3 * nn / 4 - 1)  // 2*binom(3n/4,2)
                           + 3 * nn / 4;                  // 2*(3n/8)
    doubled += (n % 8 == 0) ? 2 : -1;                     // 2*c(n)
    if (doubled % 2 != 0) throw std::logic_error("threshold: parity cancellation failed");
    return ThresholdValue{n, doubled / 2, (n % 8 == 0) ? "8N" : "4N\\8N"};
}

enum class ConstructionKind { H0, H1, TwoCliques };

inline std::string to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::H0: return "h0";
        case ConstructionKind::H1: return "h1";
        case ConstructionKind::TwoCliques: return "two-cliques";
    }
    return "?";
}

struct LabeledConstruction {
    Hypergraph3 hypergraph;
    VertexSet part_A;
    VertexSet part_B;
    ConstructionKind kind;
};

namespace detail {

// All triples meeting A = {0,...,a_size-1}, plus the given triples shifted
// into B = {a_size,...,n-1}.
inline std::vector<Triple> triples_meeting_A_plus(int n, int a_size,
                                                  const std::vector<Triple>& b_triples) {
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (a < a_size) edges.push_back(Triple{a, b, c});
    for (const auto& t : b_triples)
        edges.push_back(Triple{t[0] + a_size, t[1] + a_size, t[2] + a_size});
    return edges;
}

inline LabeledConstruction assemble(int n, int a_size, std::vector<Triple> b_triples,
                                    ConstructionKind kind) {
    VertexSet a_part, b_part;
    for (int v = 0; v < a_size; ++v) a_part.push_back(v);
    for (int v = a_size; v < n; ++v) b_part.push_back(v);
    return LabeledConstruction{
        Hypergraph3(n, triples_meeting_A_plus(n, a_size, b_triples)),
        std::move(a_part), std::move(b_part), kind};
}

}  // namespace detail

// n in 8N: all triples meeting A (|A| = n/4 - 1) plus a Steiner system of
// order 3n/4 + 1 on B.  Minimum vertex degree is threshold(n) - 1 and there
// is no perfect C4-tiling (B is C4-free, so every copy uses a vertex of A).
inline LabeledConstruction build_H0(int n) {
    if (n < 8 || n % 8 != 0)
        throw std::invalid_argument("build_H0: n must be a positive multiple of 8");
    const int a_size = n / 4 - 1;
    return detail::assemble(n, a_size, steiner(3 * n / 4 + 1).triples, ConstructionKind::H0);
}

// n in 4N \ 8N: as H0, but B carries a Steiner system of order 3n/4 + 4 with
// one edge's three points deleted (that order is 1 mod 6 in this residue
// class, while 3n/4 + 1 is not feasible).
inline LabeledConstruction build_H1(int n) {
    if (n < 12 || n % 8 != 4)
        throw std::invalid_argument("build_H1: n must be 4 mod 8 and at least 12");
    const int a_size = n / 4 - 1;
    SteinerSystem big = steiner(3 * n / 4 + 4);
    const Triple removed = big.triples.front();  // lexicographically first edge
    std::vector<int> remap(static_cast<std::size_t>(big.m), -1);
    int next = 0;
    for (int v = 0; v < big.m; ++v)
        if (v != removed[0] && v != removed[1] && v != removed[2]) remap[static_cast<std::size_t>(v)] = next++;
    std::vector<Triple> b_triples;
    for (const auto& t : big.triples) {
        int a = remap[static_cast<std::size_t>(t[0])];
        int b = remap[static_cast<std::size_t>(t[1])];
        int c = remap[static_cast<std::size_t>(t[2])];
        if (a >= 0 && b >= 0 && c >= 0) b_triples.push_back(Triple{a, b, c});
    }
    return detail::assemble(n, a_size, std::move(b_triples), ConstructionKind::H1);
}

// Two disjoint complete 3-graphs on n/2 vertices each; the tight example for
// the one-quarter absorption constant (no 4-set meeting both cliques can be
// absorbed).
inline LabeledConstruction two_cliques(int n) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("two_cliques: n must be even and at least 8");
    const int half = n / 2;
    std::vector<Triple> edges;
    for (int base : {0, half})
        for (int a = base; a < base + half; ++a)
            for (int b = a + 1; b < base + half; ++b)
                for (int c = b + 1; c < base + half; ++c)
                    edges.push_back(Triple{a, b, c});
    VertexSet a_part, b_part;
    for (int v = 0; v < half; ++v) a_part.push_back(v);
    for (int v = half; v < n; ++v) b_part.push_back(v);
    return LabeledConstruction{Hypergraph3(n, std::move(edges)), std::move(a_part),
                               std::move(b_part), ConstructionKind::TwoCliques};
}

inline Hypergraph3 complete_3graph(int n) {
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back(Triple{a, b, c});
    return Hypergraph3(n, std::move(edges));
}

}  // namespace c4t

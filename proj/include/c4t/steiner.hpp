#pragma once

#include <stdexcept>
#include <vector>

#include "c4t/hypergraph.hpp"

// Direct constructions of Steiner triple systems S(2,3,m): every pair of
// points lies in exactly one triple.  Systems exist iff m = 1,3 (mod 6); the
// two residue classes use the Bose and Skolem constructions respectively.
// Any valid system is acceptable downstream, so callers should rely on the
// invariants (pair coverage, (m-1)/2-regularity, triple count m(m-1)/6)
// rather than the particular triples produced here.

namespace c4t {

struct SteinerSystem {
    int m = 0;
    std::vector<Triple> triples;  // canonical: sorted, unique

    Hypergraph3 to_hypergraph() const { return Hypergraph3(m, triples); }
};

inline bool steiner_feasible(int m) { return m >= 3 && (m % 6 == 1 || m % 6 == 3); }

namespace detail {

// Bose, m = 6k+3: points are Z_{2k+1} x {0,1,2}; the quasigroup is
// x*y = (x+y)/2 in Z_{2k+1}, which is idempotent and commutative.
inline std::vector<Triple> bose_triples(int m) {
    const int q = m / 3;  // odd
    const int inv2 = (q + 1) / 2;
    auto id = [&](int x, int j) { return 3 * x + j; };
    std::vector<Triple> out;
    for (int x = 0; x < q; ++x)
        out.push_back(make_triple(id(x, 0), id(x, 1), id(x, 2)));
    for (int x = 0; x < q; ++x) {
        for (int y = x + 1; y < q; ++y) {
            const int z = static_cast<int>((static_cast<long long>(x + y) * inv2) % q);
            for (int j = 0; j < 3; ++j)
                out.push_back(make_triple(id(x, j), id(y, j), id(z, (j + 1) % 3)));
        }
    }
    return out;
}

// Skolem, m = 6k+1: points are (Z_{2k} x {0,1,2}) plus one extra point.
// Uses the half-idempotent commutative quasigroup on Z_{2k} obtained from
// (Z_{2k},+) by renaming 2i -> i and 2i+1 -> k+i.
inline std::vector<Triple> skolem_triples(int m) {
    const int k = m / 6;
    const int q = 2 * k;
    const int inf = m - 1;
    auto rename = [&](int e) { return (e % 2 == 0) ? e / 2 : k + (e - 1) / 2; };
    auto mul = [&](int x, int y) { return rename((x + y) % q); };
    auto id = [&](int x, int j) { return 3 * x + j; };
    std::vector<Triple> out;
    for (int i = 0; i < k; ++i)
        out.push_back(make_triple(id(i, 0), id(i, 1), id(i, 2)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 3; ++j)
            out.push_back(make_triple(inf, id(k + i, j), id(i, (j + 1) % 3)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int j = 0; j < 3; ++j)
                out.push_back(make_triple(id(x, j), id(y, j), id(mul(x, y), (j + 1) % 3)));
    return out;
}

}  // namespace detail

inline SteinerSystem steiner(int m) {
    if (!steiner_feasible(m))
        throw std::invalid_argument("steiner: order must be 1 or 3 mod 6 and at least 3");
    std::vector<Triple> t = (m % 6 == 3) ? detail::bose_triples(m) : detail::skolem_triples(m);
    std::sort(t.begin(), t.end());
    return SteinerSystem{m, std::move(t)};
}

// Exactly-one-triple-per-pair oracle.
inline bool is_valid_steiner(const SteinerSystem& s) {
    if (s.m < 3) return false;
    std::vector<int> pair_count(static_cast<std::size_t>(s.m) * static_cast<std::size_t>(s.m), 0);
    auto at = [&](int a, int b) -> int& {
        return pair_count[static_cast<std::size_t>(a) * static_cast<std::size_t>(s.m) + static_cast<std::size_t>(b)];
    };
    for (const auto& t : s.triples) {
        if (t[0] < 0 || t[2] >= s.m || t[0] >= t[1] || t[1] >= t[2]) return false;
        ++at(t[0], t[1]);
        ++at(t[0], t[2]);
        ++at(t[1], t[2]);
    }
    for (int a = 0; a < s.m; ++a)
        for (int b = a + 1; b < s.m; ++b)
            if (at(a, b) != 1) return false;
    return true;
}

}  // namespace c4t

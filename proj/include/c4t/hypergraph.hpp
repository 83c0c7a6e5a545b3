#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "c4t/common.hpp"

// 3-uniform hypergraphs on dense 0-based vertex ids, with the degree, link
// and C4 queries everything else is built on.  C4 denotes the unique 3-graph
// on four vertices with exactly two edges; a 4-set spans a copy of C4 iff it
// induces at least two edges (any two triples inside a 4-set share exactly
// two vertices).

namespace c4t {

using Vertex = int;
using Triple = std::array<Vertex, 3>;
using FourSet = std::array<Vertex, 4>;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate-free

inline Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple vertices must be distinct");
    return t;
}

inline FourSet make_four_set(Vertex a, Vertex b, Vertex c, Vertex d) {
    FourSet q{a, b, c, d};
    std::sort(q.begin(), q.end());
    if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3])
        throw std::invalid_argument("four-set vertices must be distinct");
    return q;
}

// The four triples inside a canonical 4-set, in lexicographic order.
inline std::array<Triple, 4> triples_inside(const FourSet& q) {
    return {Triple{q[0], q[1], q[2]}, Triple{q[0], q[1], q[3]},
            Triple{q[0], q[2], q[3]}, Triple{q[1], q[2], q[3]}};
}

// Link graph of a vertex: the 2-graph on V \ {center} whose edges are the
// pairs completing a hyperedge with the center.
struct LinkGraph {
    Vertex center = -1;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // sorted, first < second

    std::size_t edge_count() const { return pairs.size(); }

    bool has_pair(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
    }
};

class Hypergraph3 {
public:
    explicit Hypergraph3(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        pair_index_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    }

    Hypergraph3(int n, std::vector<Triple> edges) : Hypergraph3(n) {
        for (auto& e : edges) {
            e = make_triple(e[0], e[1], e[2]);
            check_vertex(e[2]);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (const auto& e : edges_) index_edge(e);
    }

    int vertex_count() const { return n_; }
    const std::vector<Triple>& edges() const { return edges_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    bool has_edge(Vertex a, Vertex b, Vertex c) const {
        Triple t = make_triple(a, b, c);
        check_vertex(t[2]);
        return contains_sorted(completions(t[0], t[1]), t[2]);
    }

    bool has_edge(const Triple& t) const { return has_edge(t[0], t[1], t[2]); }

    // Third vertices completing the unordered pair {a,b} to an edge.
    const std::vector<Vertex>& completions(Vertex a, Vertex b) const {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("pair vertices must be distinct");
        if (a > b) std::swap(a, b);
        return pair_index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }

    std::int64_t deg1(Vertex v) const {
        check_vertex(v);
        std::int64_t d = 0;
        for (Vertex u = 0; u < n_; ++u)
            if (u != v) d += static_cast<std::int64_t>(completions(std::min(u, v), std::max(u, v)).size());
        return d / 2;  // each edge through v was counted at both of its other vertices
    }

    std::int64_t deg2(Vertex a, Vertex b) const {
        return static_cast<std::int64_t>(completions(a, b).size());
    }

    // Number of edges containing S, |S| in {1,2}.
    std::int64_t deg_set(const VertexSet& s) const {
        if (s.size() == 1) return deg1(s[0]);
        if (s.size() == 2) {
            if (s[0] == s[1]) throw std::invalid_argument("deg_set: vertices must be distinct");
            return deg2(s[0], s[1]);
        }
        throw std::invalid_argument("deg_set: set size must be 1 or 2");
    }

    std::int64_t min_degree1() const {
        if (n_ == 0) throw std::invalid_argument("min_degree1: empty vertex set");
        std::int64_t best = deg1(0);
        for (Vertex v = 1; v < n_; ++v) best = std::min(best, deg1(v));
        return best;
    }

    LinkGraph link_graph(Vertex v) const {
        check_vertex(v);
        LinkGraph lg;
        lg.center = v;
        for (const auto& e : edges_) {
            if (e[0] == v) lg.pairs.emplace_back(e[1], e[2]);
            else if (e[1] == v) lg.pairs.emplace_back(e[0], e[2]);
            else if (e[2] == v) lg.pairs.emplace_back(e[0], e[1]);
        }
        std::sort(lg.pairs.begin(), lg.pairs.end());
        return lg;
    }

    // Number of induced edges on the 4-set.
    int induced_edge_count(const FourSet& q) const {
        check_vertex(q[3]);
        int c = 0;
        for (const auto& t : triples_inside(q))
            if (contains_sorted(completions(t[0], t[1]), t[2])) ++c;
        return c;
    }

    bool spans_c4(const FourSet& q) const { return induced_edge_count(q) >= 2; }

    // Copies of C4 on the 4-set: one per unordered pair of induced edges.
    std::int64_t count_c4_copies(const FourSet& q) const {
        return binom(induced_edge_count(q), 2);
    }

    // A set is C4-free iff every pair inside it has co-degree at most one
    // within the set.
    bool is_c4_free(const VertexSet& s) const {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const auto& comp = completions(s[i], s[j]);
                int inside = 0;
                for (Vertex w : comp) {
                    if (contains_sorted(s, w) && ++inside >= 2) return false;
                }
            }
        }
        return true;
    }

    bool is_c4_free() const {
        VertexSet all(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
        return is_c4_free(all);
    }

    // Pairs {a,b} within X (excluding v) whose completion by v is an edge.
    std::int64_t deg_pairs(Vertex v, const VertexSet& x) const {
        check_vertex(v);
        std::int64_t d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == v) continue;
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                if (x[j] == v) continue;
                if (contains_sorted(completions(x[i], x[j]), v)) ++d;
            }
        }
        return d;
    }

    // Cross pairs (a in X, b in Z, both != v) whose completion by v is an edge.
    std::int64_t deg_cross_pairs(Vertex v, const VertexSet& x, const VertexSet& z) const {
        check_vertex(v);
        std::int64_t d = 0;
        for (Vertex a : x) {
            if (a == v) continue;
            for (Vertex b : z) {
                if (b == v || b == a) continue;
                if (has_edge(v, a, b)) ++d;
            }
        }
        return d;
    }

    // Rebuilds the pair index from scratch and compares; the index is
    // maintained incrementally during construction.
    bool check_pair_index() const {
        Hypergraph3 fresh(n_);
        for (const auto& e : edges_) fresh.index_edge(e);
        return fresh.pair_index_ == pair_index_;
    }

    bool operator==(const Hypergraph3& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    void index_edge(const Triple& e) {
        auto slot = [&](Vertex a, Vertex b) -> std::vector<Vertex>& {
            return pair_index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
        };
        auto insert_sorted = [](std::vector<Vertex>& v, Vertex x) {
            v.insert(std::lower_bound(v.begin(), v.end(), x), x);
        };
        insert_sorted(slot(e[0], e[1]), e[2]);
        insert_sorted(slot(e[0], e[2]), e[1]);
        insert_sorted(slot(e[1], e[2]), e[0]);
    }

    int n_ = 0;
    std::vector<Triple> edges_;                     // canonical: sorted, unique
    std::vector<std::vector<Vertex>> pair_index_;   // (a,b) with a<b at a*n+b
};

// Paths of length two in a link graph with the middle vertex drawn from one
// set and both (unordered) ends from another.  The three path vertices plus
// the link center span a copy of C4 in the source hypergraph.
inline std::int64_t count_cherries(const LinkGraph& lg, const VertexSet& centers,
                                   const VertexSet& ends) {
    std::int64_t total = 0;
    for (Vertex m : centers) {
        std::int64_t k = 0;
        for (const auto& [a, b] : lg.pairs) {
            if (a == m && contains_sorted(ends, b)) ++k;
            else if (b == m && contains_sorted(ends, a)) ++k;
        }
        total += binom(k, 2);
    }
    return total;
}

struct InducedSubgraph {
    Hypergraph3 graph;
    VertexSet originals;  // originals[new_id] = old_id

    Vertex to_original(Vertex v) const { return originals[static_cast<std::size_t>(v)]; }
};

inline InducedSubgraph induced_subgraph(const Hypergraph3& h, const VertexSet& s) {
    VertexSet verts = sorted_unique(s);
    std::vector<int> remap(static_cast<std::size_t>(h.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= h.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        remap[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    std::vector<Triple> edges;
    for (const auto& e : h.edges()) {
        int a = remap[static_cast<std::size_t>(e[0])];
        int b = remap[static_cast<std::size_t>(e[1])];
        int c = remap[static_cast<std::size_t>(e[2])];
        if (a >= 0 && b >= 0 && c >= 0) edges.push_back(Triple{a, b, c});
    }
    return InducedSubgraph{Hypergraph3(static_cast<int>(verts.size()), std::move(edges)),
                           std::move(verts)};
}

// --- "h3" text format -------------------------------------------------------
//
//   line 1:            n <vertex count>
//   one edge per line: three space-separated 0-based vertex ids
//   comments:          from '#' to end of line
//
// Writing always emits the canonical form (edges sorted), so a
// read-write-read cycle is byte-identical.

inline Hypergraph3 read_h3(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Triple> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank/comment line before the header
            long long count = 0;
            if (tag != "n" || !(ls >> count) || count < 0)
                throw std::runtime_error("h3: expected header 'n <count>' at line " + std::to_string(lineno));
            n = static_cast<int>(count);
            continue;
        }
        Vertex a, b, c;
        if (!(ls >> a)) continue;
        if (!(ls >> b >> c))
            throw std::runtime_error("h3: malformed edge at line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("h3: trailing tokens at line " + std::to_string(lineno));
        edges.push_back(Triple{a, b, c});
    }
    if (n < 0) throw std::runtime_error("h3: missing header line");
    return Hypergraph3(n, std::move(edges));
}

inline void write_h3(std::ostream& out, const Hypergraph3& h) {
    out << "n " << h.vertex_count() << "\n";
    for (const auto& e : h.edges()) out << e[0] << " " << e[1] << " " << e[2] << "\n";
}

inline Hypergraph3 read_h3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_h3(in);
}

inline void write_h3_file(const std::string& path, const Hypergraph3& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_h3(out, h);
}

}  // namespace c4t

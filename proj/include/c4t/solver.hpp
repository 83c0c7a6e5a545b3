#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c4t/hypergraph.hpp"

// Exact search for C4-tilings.  A perfect tiling is an exact cover of the
// vertex set by spanning 4-sets; the solver branches on the uncovered vertex
// with the fewest remaining candidates, tries candidates in lexicographic
// order, and first splits the instance into connected components of the
// candidate hypergraph (a component whose size is not a multiple of four can
// never be covered).  Everything is deterministic, so certificates are
// reproducible by rerunning.

namespace c4t {

struct Tile {
    FourSet cell;
    Triple witness1, witness2;  // two distinct induced edges inside the cell
};

struct Tiling {
    std::vector<Tile> tiles;

    std::size_t size() const { return tiles.size(); }
    bool empty() const { return tiles.empty(); }

    VertexSet covered() const {
        VertexSet out;
        for (const auto& t : tiles) out.insert(out.end(), t.cell.begin(), t.cell.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

enum class Verdict { SAT, UNSAT, BOUND };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::SAT: return "SAT";
        case Verdict::UNSAT: return "UNSAT";
        case Verdict::BOUND: return "BOUND";
    }
    return "?";
}

struct Certificate {
    Verdict verdict = Verdict::UNSAT;
    int k = 0;  // tiling size: n/4 for SAT, the attached bound for BOUND
    std::optional<Tiling> tiling;
    std::int64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
};

// All 4-sets spanning a copy of C4, in lexicographic order.
inline std::vector<FourSet> enumerate_spanning_foursets(const Hypergraph3& h) {
    std::vector<FourSet> out;
    for_each_k_subset(h.vertex_count(), 4, [&](const std::vector<int>& q) {
        FourSet fs{q[0], q[1], q[2], q[3]};
        if (h.spans_c4(fs)) out.push_back(fs);
    });
    return out;
}

inline bool verify_tiling(const Hypergraph3& h, const Tiling& t, bool require_perfect) {
    std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const auto& tile : t.tiles) {
        const FourSet& q = tile.cell;
        for (int i = 0; i < 4; ++i) {
            if (q[i] < 0 || q[i] >= h.vertex_count()) return false;
            if (i > 0 && q[i] <= q[i - 1]) return false;
            if (seen[static_cast<std::size_t>(q[i])]) return false;
            seen[static_cast<std::size_t>(q[i])] = 1;
        }
        if (tile.witness1 == tile.witness2) return false;
        int shared = 0;
        for (Vertex a : tile.witness1)
            for (Vertex b : tile.witness2) shared += (a == b);
        if (shared != 2) return false;
        for (const Triple* w : {&tile.witness1, &tile.witness2}) {
            for (Vertex v : *w)
                if (!std::count(q.begin(), q.end(), v)) return false;
            if (!h.has_edge(*w)) return false;
        }
    }
    if (require_perfect)
        for (char s : seen)
            if (!s) return false;
    return true;
}

namespace detail {

inline Tile make_tile(const Hypergraph3& h, const FourSet& q) {
    std::vector<Triple> induced;
    for (const auto& t : triples_inside(q))
        if (h.has_edge(t)) induced.push_back(t);
    if (induced.size() < 2) throw std::logic_error("make_tile: 4-set does not span C4");
    return Tile{q, induced[0], induced[1]};
}

struct CoverInstance {
    const Hypergraph3* h = nullptr;
    std::vector<FourSet> cands;
    std::vector<std::vector<int>> cands_at;  // vertex -> candidate indices (ascending)

    explicit CoverInstance(const Hypergraph3& graph) : h(&graph), cands(enumerate_spanning_foursets(graph)) {
        cands_at.resize(static_cast<std::size_t>(graph.vertex_count()));
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (Vertex v : cands[i]) cands_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }

    // Connected components of the candidate structure; vertices in no
    // candidate form singleton components.
    std::vector<std::vector<Vertex>> components() const {
        const int n = h->vertex_count();
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& q : cands) {
            int r = find(q[0]);
            for (int i = 1; i < 4; ++i) {
                int s = find(q[i]);
                if (s != r) parent[static_cast<std::size_t>(s)] = r;
            }
        }
        std::vector<std::vector<Vertex>> comps;
        std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
        for (Vertex v = 0; v < n; ++v) {
            int r = find(v);
            if (comp_of[static_cast<std::size_t>(r)] < 0) {
                comp_of[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(r)])].push_back(v);
        }
        return comps;  // ascending min-vertex order by construction
    }
};

// Exact cover of one component.  Returns true and appends chosen candidates
// on success; explores exhaustively before returning false.
inline bool cover_component(const CoverInstance& inst, const std::vector<Vertex>& comp,
                            std::vector<char>& used, std::vector<int>& chosen,
                            std::int64_t& nodes, int still_uncovered) {
    if (still_uncovered == 0) return true;
    int best_v = -1;
    int best_count = -1;
    for (Vertex v : comp) {
        if (used[static_cast<std::size_t>(v)]) continue;
        int count = 0;
        for (int ci : inst.cands_at[static_cast<std::size_t>(v)]) {
            const FourSet& q = inst.cands[static_cast<std::size_t>(ci)];
            bool open = !(used[static_cast<std::size_t>(q[0])] || used[static_cast<std::size_t>(q[1])] ||
                          used[static_cast<std::size_t>(q[2])] || used[static_cast<std::size_t>(q[3])]);
            count += open;
        }
        if (count == 0) return false;  // dead vertex, no cover possible
        if (best_count < 0 || count < best_count) {
            best_v = v;
            best_count = count;
            if (count == 1) break;
        }
    }
    for (int ci : inst.cands_at[static_cast<std::size_t>(best_v)]) {
        const FourSet& q = inst.cands[static_cast<std::size_t>(ci)];
        if (used[static_cast<std::size_t>(q[0])] || used[static_cast<std::size_t>(q[1])] ||
            used[static_cast<std::size_t>(q[2])] || used[static_cast<std::size_t>(q[3])])
            continue;
        ++nodes;
        for (Vertex v : q) used[static_cast<std::size_t>(v)] = 1;
        chosen.push_back(ci);
        if (cover_component(inst, comp, used, chosen, nodes, still_uncovered - 4)) return true;
        chosen.pop_back();
        for (Vertex v : q) used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

// Branch and bound for a maximum packing of one component.  Branches on the
// lowest eligible vertex: either some candidate covers it, or it stays
// permanently uncovered.  Bound: |packing| + floor(eligible/4).
struct MaxPackSearch {
    const CoverInstance& inst;
    const std::vector<Vertex>& comp;
    std::vector<char>& used;      // covered by a chosen candidate
    std::vector<char>& excluded;  // decided to stay uncovered
    std::vector<int> current;
    std::vector<int> best;
    std::int64_t nodes = 0;

    MaxPackSearch(const CoverInstance& i, const std::vector<Vertex>& c, std::vector<char>& u,
                  std::vector<char>& e)
        : inst(i), comp(c), used(u), excluded(e) {}

    void run(int eligible) {
        Vertex branch_v = -1;
        for (Vertex v : comp) {
            if (!used[static_cast<std::size_t>(v)] && !excluded[static_cast<std::size_t>(v)]) {
                branch_v = v;
                break;
            }
        }
        if (branch_v < 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (static_cast<int>(current.size()) + eligible / 4 <= static_cast<int>(best.size()))
            return;
        for (int ci : inst.cands_at[static_cast<std::size_t>(branch_v)]) {
            const FourSet& q = inst.cands[static_cast<std::size_t>(ci)];
            bool open = true;
            for (Vertex v : q)
                open = open && !used[static_cast<std::size_t>(v)] && !excluded[static_cast<std::size_t>(v)];
            if (!open) continue;
            ++nodes;
            for (Vertex v : q) used[static_cast<std::size_t>(v)] = 1;
            current.push_back(ci);
            run(eligible - 4);
            current.pop_back();
            for (Vertex v : q) used[static_cast<std::size_t>(v)] = 0;
        }
        excluded[static_cast<std::size_t>(branch_v)] = 1;
        run(eligible - 1);
        excluded[static_cast<std::size_t>(branch_v)] = 0;
    }
};

}  // namespace detail

inline Certificate find_perfect_tiling(const Hypergraph3& h) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](Certificate c) {
        c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return c;
    };
    Certificate cert;
    if (h.vertex_count() % 4 != 0) return finish(cert);  // UNSAT outright

    detail::CoverInstance inst(h);
    auto comps = inst.components();
    for (const auto& comp : comps)
        if (comp.size() % 4 != 0) return finish(cert);  // some component can't be covered

    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<int> chosen;
    std::int64_t nodes = 0;
    for (const auto& comp : comps) {
        if (!detail::cover_component(inst, comp, used, chosen, nodes, static_cast<int>(comp.size()))) {
            cert.nodes_explored = nodes;
            return finish(cert);
        }
    }
    Tiling t;
    for (int ci : chosen) t.tiles.push_back(detail::make_tile(h, inst.cands[static_cast<std::size_t>(ci)]));
    std::sort(t.tiles.begin(), t.tiles.end(), [](const Tile& a, const Tile& b) { return a.cell < b.cell; });
    cert.verdict = Verdict::SAT;
    cert.k = h.vertex_count() / 4;
    cert.tiling = std::move(t);
    cert.nodes_explored = nodes;
    return finish(cert);
}

inline Certificate max_tiling(const Hypergraph3& h) {
    const auto start = std::chrono::steady_clock::now();
    detail::CoverInstance inst(h);
    auto comps = inst.components();

    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<char> excluded(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<int> all_chosen;
    std::int64_t nodes = 0;
    for (const auto& comp : comps) {
        detail::MaxPackSearch search(inst, comp, used, excluded);
        search.run(static_cast<int>(comp.size()));
        nodes += search.nodes;
        all_chosen.insert(all_chosen.end(), search.best.begin(), search.best.end());
        for (int ci : search.best)  // freeze this component's packing
            for (Vertex v : inst.cands[static_cast<std::size_t>(ci)]) used[static_cast<std::size_t>(v)] = 1;
    }

    Tiling t;
    for (int ci : all_chosen) t.tiles.push_back(detail::make_tile(h, inst.cands[static_cast<std::size_t>(ci)]));
    std::sort(t.tiles.begin(), t.tiles.end(), [](const Tile& a, const Tile& b) { return a.cell < b.cell; });

    Certificate cert;
    cert.k = static_cast<int>(t.size());
    const bool perfect = h.vertex_count() % 4 == 0 && cert.k == h.vertex_count() / 4;
    cert.verdict = perfect ? Verdict::SAT : Verdict::BOUND;
    cert.tiling = std::move(t);
    cert.nodes_explored = nodes;
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

// Maximum-cardinality C4-free vertex set, ties broken to the
// lexicographically smallest set.  Include-first depth-first search over the
// pair-co-degree characterization; practical up to n of about 16.
inline VertexSet max_c4_free_set(const Hypergraph3& h) {
    const int n = h.vertex_count();
    VertexSet best, current;

    // adding v keeps S C4-free iff no pair inside S u {v} reaches co-degree 2
    auto can_add = [&](Vertex v) {
        for (Vertex x : current) {
            int inside = 0;
            for (Vertex w : h.completions(x, v))
                if (w == v || contains_sorted(current, w))
                    if (++inside >= 2) return false;
        }
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (contains_sorted(h.completions(current[i], current[j]), v)) {
                    for (Vertex w : h.completions(current[i], current[j]))
                        if (w != v && contains_sorted(current, w)) return false;
                }
        return true;
    };

    auto dfs = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) + (n - next) <= static_cast<int>(best.size())) return;
        if (next == n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (can_add(next)) {
            current.push_back(next);
            self(self, next + 1);
            current.pop_back();
        }
        self(self, next + 1);
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace c4t

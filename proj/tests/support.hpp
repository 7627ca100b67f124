#pragma once

// Shared test helpers: graph enumeration up to isomorphism, seeded random
// instances and small brute-force routines written independently of the library.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homlab.hpp"

namespace homlab::testing {

namespace canon_detail {

using Rows = std::vector<std::uint32_t>;

inline Rows rows_of(const Graph& G) {
    Rows r(G.vertex_count(), 0);
    for (const Edge& e : G.edges())
        if (!e.is_loop()) {
            r[e.u] |= 1U << e.v;
            r[e.v] |= 1U << e.u;
        }
    return r;
}

// colour[v] = number of vertices with a strictly smaller key; the key is the
// colour followed by the histogram of neighbour colours
inline void refine(const Rows& adj, std::vector<int>& colour) {
    const int n = static_cast<int>(adj.size());
    using Key = std::array<std::uint8_t, 13>;
    std::vector<Key> key(n);
    std::vector<int> next(n);
    int cells = 0;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            key[v].fill(0);
            key[v][0] = static_cast<std::uint8_t>(colour[v]);
            for (std::uint32_t m = adj[v]; m; m &= m - 1)
                ++key[v][1 + colour[std::countr_zero(m)]];
        }
        std::uint32_t used = 0;
        for (int v = 0; v < n; ++v) {
            int c = 0;
            for (int u = 0; u < n; ++u)
                c += key[u] < key[v];
            next[v] = c;
            used |= 1U << c;
        }
        colour.swap(next);
        const int now = std::popcount(used);
        if (now == cells || now == n)
            return;
        cells = now;
    }
}

inline std::uint64_t code_of(const Rows& adj, const std::vector<int>& colour) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v)
        at[colour[v]] = v;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | ((adj[at[i]] >> at[j]) & 1U);
    return code;
}

inline bool twins(const Rows& adj, int u, int v) {
    const std::uint32_t mask = ~((1U << u) | (1U << v));
    return (adj[u] & mask) == (adj[v] & mask);
}

inline void search(const Rows& adj, std::vector<int> colour, std::uint64_t& best, bool& found) {
    refine(adj, colour);
    const int n = static_cast<int>(adj.size());
    std::vector<int> count(n, 0);
    for (int c : colour)
        ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        const std::uint64_t code = code_of(adj, colour);
        if (!found || code > best)
            best = code;
        found = true;
        return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
        if (colour[v] != target)
            continue;
        // swapping twins of the same cell is an automorphism fixing the colouring
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(adj, u, v); }))
            continue;
        tried.push_back(v);
        std::vector<int> next = colour;
        for (int u = 0; u < n; ++u)
            if (colour[u] == target && u != v)
                next[u] = target + 1;
        search(adj, next, best, found);
    }
}

} // namespace canon_detail

namespace canon_detail {
inline std::uint64_t code_of_rows(const Rows& adj) {
    std::uint64_t best = 0;
    bool found = false;
    search(adj, std::vector<int>(adj.size(), 0), best, found);
    return best;
}
} // namespace canon_detail

/// Isomorphism-invariant code of a loopless graph on at most 11 vertices.
/// Codes are equal iff the graphs are isomorphic.
inline std::uint64_t canonical_code(const Graph& G) { return canon_detail::code_of_rows(canon_detail::rows_of(G)); }

/// Graph with the given code (inverse of canonical_code for the canonical labelling).
inline Graph from_code(int n, std::uint64_t code) {
    std::vector<std::pair<Vertex, Vertex>> es;
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> --bit) & 1U)
                es.emplace_back(i, j);
    return Graph(n, es);
}

/// Connected loopless graphs on exactly n vertices, one per isomorphism class.
/// Built by attaching a vertex to each class on n - 1 vertices: every connected
/// graph has a vertex whose removal keeps it connected.
inline std::vector<Graph> connected_graphs(int n) {
    if (n <= 0)
        return {};
    if (n == 1)
        return {Graph(1)};
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : connected_graphs(n - 1)) {
        canon_detail::Rows rows = canon_detail::rows_of(base);
        rows.push_back(0);
        for (std::uint32_t nb = 1; nb < (1U << (n - 1)); ++nb) {
            for (int v = 0; v < n - 1; ++v)
                rows[v] = (rows[v] & ~(1U << (n - 1))) | (((nb >> v) & 1U) << (n - 1));
            rows[n - 1] = nb;
            const auto code = canon_detail::code_of_rows(rows);
            if (seen.insert(code).second)
                out.push_back(from_code(n, code));
        }
    }
    return out;
}

/// Connected graphs on 1..max_n vertices.
inline std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = connected_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// All loopless graphs on exactly n vertices (n <= 6), one per isomorphism class.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U)
                es.push_back(pairs[i]);
        Graph g(n, es);
        if (seen.insert(canonical_code(g)).second)
            out.push_back(g);
    }
    return out;
}

inline std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_n; ++n) {
        auto part = all_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Every labelled graph on n vertices with every loop pattern.
inline std::vector<Graph> labelled_graphs_with_loops(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U)
                es.push_back(pairs[i]);
        out.emplace_back(n, es);
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
                es.emplace_back(i, j);
    return Graph(n, es);
}

/// Vertex and edge weights uniform in [lo, hi], with -inf on a fraction of edge entries.
inline WeightModel random_weights(std::mt19937_64& rng, const Graph& G, const Graph& H, int lo, int hi,
                                  double neg_inf_rate) {
    WeightModel w(G, H);
    std::uniform_int_distribution<int> d(lo, hi);
    std::uniform_real_distribution<double> u(0, 1);
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        for (Vertex a = 0; a < H.vertex_count(); ++a)
            w.set_vertex_weight(v, a, d(rng));
    for (const Edge& e : G.edges())
        for (const Edge& f : H.edges())
            w.set_edge_weight(e.u, e.v, f.u, f.v, u(rng) < neg_inf_rate ? NEG_INF : ExtendedWeight(d(rng)));
    return w;
}

/// Random non-empty lists.
inline ListAssignment random_lists(std::mt19937_64& rng, const Graph& G, const Graph& H) {
    auto L = ListAssignment::full(G, H);
    const Mask all = low_bits(H.vertex_count());
    for (Vertex v = 0; v < G.vertex_count(); ++v) {
        Mask m = 0;
        while (!m)
            m = rng() & all;
        L.set_mask(v, m);
    }
    return L;
}

/// Calls f(h) for every map V(G) -> V(H), in lexicographic order.
inline void for_each_map(int n, int k, const std::function<void(const Homomorphism&)>& f) {
    Homomorphism h(n, 0);
    if (k == 0) {
        if (n == 0)
            f(h);
        return;
    }
    for (;;) {
        f(h);
        int i = n - 1;
        while (i >= 0 && h[i] == k - 1)
            h[i--] = 0;
        if (i < 0)
            return;
        ++h[i];
    }
}

/// Plain maximum over all maps, independent of the library's search code.
inline std::optional<ExtendedWeight> brute_optimum(const WhomInstance& inst) {
    std::optional<ExtendedWeight> best;
    for_each_map(inst.G.vertex_count(), inst.H.vertex_count(), [&](const Homomorphism& h) {
        if (!inst.lists.respects(h) || !is_homomorphism(inst.G, inst.H, h))
            return;
        ExtendedWeight w = 0;
        for (Vertex v = 0; v < inst.G.vertex_count(); ++v)
            w += inst.weights.vertex_weight(v, h[v]);
        for (const Edge& e : inst.G.edges())
            w += inst.weights.edge_weight(e.u, e.v, h[e.u], h[e.v]);
        if (!best || w > *best)
            best = w;
    });
    return best;
}

/// Existence of a locally constrained homomorphism by plain enumeration.
inline std::optional<Homomorphism> brute_local(const Graph& G, const Graph& H, LocalVariant variant) {
    std::optional<Homomorphism> found;
    for_each_map(G.vertex_count(), H.vertex_count(), [&](const Homomorphism& h) {
        if (!found && is_locally(variant, G, H, h))
            found = h;
    });
    return found;
}

/// Minimum separator size by subset enumeration with bitmask components; -1 if none.
inline int brute_min_separator(const Graph& G, Balance beta) {
    const int n = G.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : G.edges())
        if (!e.is_loop()) {
            adj[e.u] |= 1U << e.v;
            adj[e.v] |= 1U << e.u;
        }
    int best = -1;
    for (std::uint32_t S = 0; S < (1U << n); ++S) {
        const int s = std::popcount(S);
        if (best >= 0 && s >= best)
            continue;
        const int rest = n - s;
        const std::int64_t limit = beta.num * rest / beta.den;
        std::vector<int> sizes;
        std::uint32_t left = ((1U << n) - 1) & ~S;
        while (left) {
            std::uint32_t comp = left & -left, frontier = comp;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint32_t add = adj[v] & left & ~comp;
                comp |= add;
                frontier |= add;
            }
            sizes.push_back(std::popcount(comp));
            left &= ~comp;
        }
        std::vector<char> reach(rest + 1, 0);
        reach[0] = 1;
        for (int c : sizes)
            for (int t = rest; t >= c; --t)
                reach[t] |= reach[t - c];
        for (int t = 0; t <= rest; ++t)
            if (reach[t] && t <= limit && rest - t <= limit) {
                best = s;
                break;
            }
    }
    return best;
}


/// Random positive NAE formula with distinct 2- and 3-clauses and at most 3 occurrences per variable.
inline CnfFormula random_pos_nae(std::mt19937_64& rng, int variables, int clauses) {
    CnfFormula f;
    f.variables = variables;
    f.dialect = CnfDialect::pos_nae_3sat;
    std::vector<int> used(variables + 1, 0);
    for (int tries = 0; tries < 1000 && static_cast<int>(f.clauses.size()) < clauses; ++tries) {
        std::vector<int> vars(variables);
        for (int v = 0; v < variables; ++v)
            vars[v] = v + 1;
        std::shuffle(vars.begin(), vars.end(), rng);
        vars.resize(std::min<std::size_t>(vars.size(), 2 + rng() % 2));
        std::sort(vars.begin(), vars.end());
        bool ok = vars.size() >= 2 && std::find(f.clauses.begin(), f.clauses.end(), vars) == f.clauses.end();
        for (int v : vars)
            ok = ok && used[v] < 3;
        if (!ok)
            continue;
        for (int v : vars)
            ++used[v];
        f.clauses.push_back(vars);
    }
    return f;
}

enum class Family { maxcut_segments, oct_segments, c4_grid, nae_maxcut, bisection };

/// One generated instance with the size its construction predicts.
struct CorpusCase {
    std::string name;
    Family family;
    Graph instance;
    std::optional<ReductionOutput> output;
    int expected_vertices;
    std::optional<int> expected_edges;
};

inline std::vector<Graph> corpus_graphs() {
    std::vector<Graph> gs = {targets::complete(1), targets::complete(2), targets::path(3), targets::complete(3),
                             targets::cycle(4),    targets::cycle(5),    Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
    std::mt19937_64 rng(2024);
    while (gs.size() < 10)
        gs.push_back(random_graph(rng, 4 + static_cast<int>(gs.size() % 3), 0.5));
    return gs;
}

/// 50 instances: 10 graphs through each graph reduction, 10 positive NAE formulas.
inline std::vector<CorpusCase> reduction_corpus() {
    std::vector<CorpusCase> out;
    const auto gs = corpus_graphs();
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& G = gs[i];
        const int n = G.vertex_count(), m = G.edge_count();
        const std::string id = "g" + std::to_string(i);
        auto a = bisection_to_maxcut_segments(G, 1);
        out.push_back({"maxcut-segments/" + id, Family::maxcut_segments, a.instance, a, 18 * n + 4 * m, {}});
        auto b = is_to_oct_segments(G, 1);
        out.push_back({"oct/" + id, Family::oct_segments, b.instance, b, 9 * n + 2 * m, {}});
        auto c = is_to_whom_c4(G, 1);
        out.push_back({"c4/" + id, Family::c4_grid, c.instance, c, 2 * n, {}});
        auto d = maxcut_to_bisection(G, 1);
        out.push_back({"bisection/" + id, Family::bisection, d.graph, {}, 2 * n, m + n});
    }
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        CnfFormula f = random_pos_nae(rng, 3 + i % 4, 1 + i % 5);
        auto c = posnae3sat_to_maxcut(f);
        const int m2 = f.clause_count(2), m3 = f.clause_count(3);
        out.push_back({"nae/f" + std::to_string(i), Family::nae_maxcut, c.graph, {}, f.variables + 6 * m3, m2 + 9 * m3});
    }
    return out;
}

} // namespace homlab::testing

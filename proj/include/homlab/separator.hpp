#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/combinatorics.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph.hpp"

namespace homlab {

/// Balance constant beta = num/den with 1/2 < beta < 1.
struct Balance {
    std::int64_t num = 2;
    std::int64_t den = 3;

    void check() const {
        if (den <= 0 || 2 * num <= den || num >= den)
            throw ContractViolation("balance must lie strictly between 1/2 and 1");
    }

    /// Largest side size allowed when `rest` vertices lie outside S.
    std::int64_t side_limit(std::int64_t rest) const { return num * rest / den; }
};

/// S, V1, V2 partition V(G); no V1-V2 edges; |Vi| <= beta * (n - |S|).
struct Separation {
    std::vector<Vertex> S;
    std::vector<Vertex> V1;
    std::vector<Vertex> V2;
    Balance beta;
};

inline bool verify_separation(const Graph& G, const Separation& sep) {
    const int n = G.vertex_count();
    std::vector<int> part(n, -1);
    auto place = [&](const std::vector<Vertex>& vs, int p) {
        for (Vertex v : vs) {
            if (v < 0 || v >= n || part[v] != -1)
                return false;
            part[v] = p;
        }
        return true;
    };
    if (!place(sep.S, 0) || !place(sep.V1, 1) || !place(sep.V2, 2))
        return false;
    if (std::count(part.begin(), part.end(), -1) != 0)
        return false;
    for (const Edge& e : G.edges())
        if (part[e.u] + part[e.v] == 3)
            return false;
    if (sep.beta.den <= 0 || 2 * sep.beta.num <= sep.beta.den || sep.beta.num >= sep.beta.den)
        return false;
    const std::int64_t rest = n - static_cast<std::int64_t>(sep.S.size());
    const std::int64_t limit = sep.beta.side_limit(rest);
    return static_cast<std::int64_t>(sep.V1.size()) <= limit && static_cast<std::int64_t>(sep.V2.size()) <= limit;
}

/// Splits the components of G - S into two sides within the balance limit, if possible.
/// The larger feasible side becomes V1; ties among subsets resolve toward early components.
inline std::optional<Separation> balanced_split(const Graph& G, std::vector<Vertex> S, Balance beta = {}) {
    const int n = G.vertex_count();
    std::vector<char> in_s(n, 0);
    for (Vertex v : S)
        in_s[v] = 1;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (in_s[s] || comp[s] >= 0)
            continue;
        std::vector<Vertex> cur{s};
        comp[s] = static_cast<int>(comps.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (Vertex w : G.neighbors(cur[i]))
                if (!in_s[w] && comp[w] < 0) {
                    comp[w] = comp[s];
                    cur.push_back(w);
                }
        comps.push_back(std::move(cur));
    }
    const int rest = n - static_cast<int>(S.size());
    const std::int64_t limit = beta.side_limit(rest);
    for (const auto& c : comps)
        if (static_cast<std::int64_t>(c.size()) > limit)
            return std::nullopt;
    const int k = static_cast<int>(comps.size());
    // reach[i][x]: some subset of the first i components has total size x
    std::vector<std::vector<char>> reach(k + 1, std::vector<char>(rest + 1, 0));
    reach[0][0] = 1;
    for (int i = 0; i < k; ++i) {
        const int c = static_cast<int>(comps[i].size());
        for (int x = 0; x <= rest; ++x)
            if (reach[i][x]) {
                reach[i + 1][x] = 1;
                if (x + c <= rest)
                    reach[i + 1][x + c] = 1;
            }
    }
    int target = -1;
    for (std::int64_t x = std::min<std::int64_t>(limit, rest); x >= rest - limit && x >= 0; --x)
        if (reach[k][x]) {
            target = static_cast<int>(x);
            break;
        }
    if (target < 0)
        return std::nullopt;
    Separation sep;
    sep.beta = beta;
    std::vector<char> side1(k, 0);
    for (int i = k, x = target; i > 0; --i) {
        const int c = static_cast<int>(comps[i - 1].size());
        if (reach[i - 1][x])
            continue;
        side1[i - 1] = 1;
        x -= c;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (in_s[v])
            continue;
        (side1[comp[v]] ? sep.V1 : sep.V2).push_back(v);
    }
    std::sort(S.begin(), S.end());
    sep.S = std::move(S);
    return sep;
}

/// Minimum-size balanced separator with |S| <= max_size, trying sizes 0, 1, ...
/// and subsets in colex order within a size. Empty when none exists.
/// Throws BudgetExceeded (partial bound = size being searched) when `budget` runs out.
inline std::optional<Separation> find_balanced_separator(const Graph& G, int max_size, Balance beta = {},
                                                         SearchBudget* budget = nullptr) {
    beta.check();
    const int n = G.vertex_count();
    if (max_size < 0 || max_size > n)
        throw ContractViolation("separator size bound must lie in [0, n]");
    std::vector<Vertex> S;
    for (int s = 0; s <= max_size; ++s)
        for (ColexSubsets c(n, s); !c.done(); c.next()) {
            if (budget)
                budget->tick("separator search", static_cast<std::size_t>(s));
            S.assign(c.current().begin(), c.current().end());
            if (auto sep = balanced_split(G, S, beta))
                return sep;
        }
    return std::nullopt;
}

namespace detail {
inline std::vector<int> bfs_layers(const Graph& G, Vertex s, const std::vector<char>& alive) {
    std::vector<int> dist(G.vertex_count(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : G.neighbors(queue[i]))
            if (alive[w] && dist[w] < 0) {
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
    return dist;
}
} // namespace detail

/// BFS-layer separator with greedy shrinking. Best effort: may return nothing,
/// never returns an invalid separation.
inline std::optional<Separation> heuristic_separator(const Graph& G, Balance beta = {}) {
    beta.check();
    const int n = G.vertex_count();
    if (auto sep = balanced_split(G, {}, beta))
        return sep;
    std::optional<Separation> best;
    auto consider = [&](std::optional<Separation> cand) {
        if (cand && (!best || cand->S.size() < best->S.size()))
            best = std::move(cand);
    };
    std::vector<char> alive(n, 1);
    auto comps = G.components();
    const auto& big = *std::max_element(comps.begin(), comps.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    // start points: the first vertex and the two ends of a double BFS sweep
    std::vector<Vertex> starts{big.front()};
    for (int sweep = 0; sweep < 2; ++sweep) {
        auto d = detail::bfs_layers(G, starts.back(), alive);
        Vertex far = starts.back();
        for (Vertex v : big)
            if (d[v] > d[far])
                far = v;
        starts.push_back(far);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (Vertex s : starts) {
        auto d = detail::bfs_layers(G, s, alive);
        int depth = *std::max_element(d.begin(), d.end());
        for (int layer = 0; layer <= depth; ++layer) {
            std::vector<Vertex> S;
            for (Vertex v = 0; v < n; ++v)
                if (d[v] == layer)
                    S.push_back(v);
            // two adjacent layers also separate, and help when single layers are unbalanced
            consider(balanced_split(G, S, beta));
            if (layer < depth) {
                for (Vertex v = 0; v < n; ++v)
                    if (d[v] == layer + 1)
                        S.push_back(v);
                consider(balanced_split(G, S, beta));
            }
        }
    }
    if (!best)
        consider(balanced_split(G, [&] {
                     std::vector<Vertex> all(n);
                     for (int i = 0; i < n; ++i)
                         all[i] = i;
                     return all;
                 }(), beta));
    // greedy shrinking: drop separator vertices while the split stays balanced
    bool changed = true;
    while (best && changed) {
        changed = false;
        for (std::size_t i = 0; i < best->S.size(); ++i) {
            std::vector<Vertex> S = best->S;
            S.erase(S.begin() + static_cast<std::ptrdiff_t>(i));
            if (auto cand = balanced_split(G, S, beta)) {
                best = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    return best;
}

} // namespace homlab

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/combinatorics.hpp"
#include "homlab/graph.hpp"
#include "homlab/separator.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

/// Two disjoint t-sets with every cross pair adjacent.
struct Biclique {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// First K_{t,t}: left side is the colex-least t-subset whose common
/// neighbourhood (outside itself) has t vertices; right side is the t lowest of those.
inline std::optional<Biclique> find_biclique(const Graph& G, int t, SearchBudget* budget = nullptr) {
    if (t < 1)
        throw ContractViolation("biclique size must be at least 1");
    const int n = G.vertex_count();
    std::vector<Vertex> common;
    for (ColexSubsets c(n, t); !c.done(); c.next()) {
        if (budget)
            budget->tick("biclique search");
        const auto& A = c.current();
        common.clear();
        for (Vertex u : G.neighbors(A[0]))
            if (!std::binary_search(A.begin(), A.end(), u))
                common.push_back(u);
        for (std::size_t i = 1; i < A.size() && static_cast<int>(common.size()) >= t; ++i)
            common.erase(std::remove_if(common.begin(), common.end(), [&](Vertex u) { return !G.adjacent(A[i], u); }),
                         common.end());
        if (static_cast<int>(common.size()) >= t)
            return Biclique{std::vector<Vertex>(A.begin(), A.end()), std::vector<Vertex>(common.begin(), common.begin() + t)};
    }
    return std::nullopt;
}

struct SurjectiveConfig {
    /// Dense case when |E| > ceil(density_constant / 3 * n^(4/3) * ln n).
    double density_constant = 1.0;
    /// Separator size budget is ceil(separator_constant * n^(2/3) * sqrt(ln n)).
    double separator_constant = 2.0;
    std::uint64_t separator_node_budget = 20000;
    std::uint64_t biclique_node_budget = 200000;
    /// Pieces with at most this many colourable vertices are enumerated.
    int base_size = 2;
    Balance beta{};
    SearchBudget* budget = nullptr;
};

struct SurjectiveStats {
    std::uint64_t calls = 0;
    std::uint64_t biclique_steps = 0;
    std::uint64_t separator_steps = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t memo_hits = 0;
};

namespace p3_detail {

// Colours of the P3 target: vertices 0, 1, 2 labelled "1", "2", "3".
inline constexpr Vertex low = 0;
inline constexpr Vertex mid = 1;
inline constexpr Vertex high = 2;
inline constexpr Mask both = bit(low) | bit(high);

using Assignment = std::vector<std::pair<Vertex, Vertex>>;

/// Colour the live X-vertices with {1,3} so that every live y sees every colour of sigma(y).
struct Problem {
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    std::map<Vertex, Mask> sigma;
};

class Solver {
public:
    Solver(const Graph& G, const SurjectiveConfig& cfg, SurjectiveStats& stats) : G(G), cfg(cfg), stats(stats) {}

    std::optional<Assignment> solve(Problem p) {
        ++stats.calls;
        tick();
        Assignment out;
        if (!cleanup(p, out))
            return std::nullopt;
        if (p.xs.empty())
            return out;
        auto parts = components(p);
        if (parts.size() > 1) {
            for (auto& part : parts) {
                auto r = solve(std::move(part));
                if (!r)
                    return std::nullopt;
                out.insert(out.end(), r->begin(), r->end());
            }
            return out;
        }
        auto r = solve_connected(p);
        if (!r)
            return std::nullopt;
        out.insert(out.end(), r->begin(), r->end());
        return out;
    }

private:
    std::optional<Assignment> solve_connected(const Problem& p) {
        if (static_cast<int>(p.xs.size()) <= cfg.base_size)
            return enumerate(p);
        const int n = static_cast<int>(p.xs.size() + p.ys.size());
        const double ln = std::log(static_cast<double>(n));
        const auto edges = live_edges(p);
        const double dense = std::ceil(cfg.density_constant / 3.0 * std::pow(n, 4.0 / 3.0) * ln);
        if (static_cast<double>(edges.size()) > dense) {
            if (auto r = biclique_step(p))
                return *r;
        }
        if (auto r = separator_step(p, edges, ln))
            return *r;
        return enumerate(p);
    }

    // Removes satisfied and useless vertices; false when some y can no longer be satisfied.
    bool cleanup(Problem& p, Assignment& out) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Vertex> ys;
            for (Vertex y : p.ys) {
                const Mask s = p.sigma.at(y);
                if (!s) {
                    p.sigma.erase(y);
                    changed = true;
                    continue;
                }
                int live = 0;
                for (Vertex x : G.neighbors(y))
                    if (std::binary_search(p.xs.begin(), p.xs.end(), x))
                        ++live;
                if (live < popcount(s))
                    return false;
                ys.push_back(y);
            }
            p.ys = std::move(ys);
            std::vector<Vertex> xs;
            for (Vertex x : p.xs) {
                bool needed = false;
                for (Vertex y : G.neighbors(x))
                    if (p.sigma.count(y)) {
                        needed = true;
                        break;
                    }
                if (needed) {
                    xs.push_back(x);
                } else {
                    out.emplace_back(x, low); // colour does not matter any more
                    changed = true;
                }
            }
            p.xs = std::move(xs);
        }
        return true;
    }

    std::vector<Problem> components(const Problem& p) const {
        std::map<Vertex, int> comp;
        for (Vertex v : p.xs)
            comp[v] = -1;
        for (Vertex v : p.ys)
            comp[v] = -1;
        std::vector<Problem> out;
        for (Vertex s : p.xs) {
            if (comp[s] >= 0)
                continue;
            const int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<Vertex> queue{s};
            comp[s] = id;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (Vertex w : G.neighbors(queue[i])) {
                    auto it = comp.find(w);
                    if (it != comp.end() && it->second < 0) {
                        it->second = id;
                        queue.push_back(w);
                    }
                }
        }
        for (auto [v, c] : comp) {
            if (p.sigma.count(v)) {
                out[c].ys.push_back(v);
                out[c].sigma[v] = p.sigma.at(v);
            } else {
                out[c].xs.push_back(v);
            }
        }
        return out;
    }

    std::vector<std::pair<Vertex, Vertex>> live_edges(const Problem& p) const {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (Vertex y : p.ys)
            for (Vertex x : G.neighbors(y))
                if (std::binary_search(p.xs.begin(), p.xs.end(), x))
                    es.emplace_back(x, y);
        return es;
    }

    // Assigns colour c to x and drops it from the sigma of its neighbours.
    static void apply(Problem& p, const Graph& G, Vertex x, Vertex c, Assignment& out) {
        out.emplace_back(x, c);
        p.xs.erase(std::lower_bound(p.xs.begin(), p.xs.end(), x));
        for (Vertex y : G.neighbors(x)) {
            auto it = p.sigma.find(y);
            if (it != p.sigma.end())
                it->second &= ~bit(c);
        }
    }

    std::optional<Assignment> with_fixed(const Problem& p, const std::vector<std::pair<Vertex, Vertex>>& fixed) {
        Problem q = p;
        Assignment out;
        for (auto [x, c] : fixed)
            apply(q, G, x, c, out);
        auto r = solve(std::move(q));
        if (!r)
            return std::nullopt;
        out.insert(out.end(), r->begin(), r->end());
        return out;
    }

    /// Dense case: find K_{t,t} with X' among the colourable vertices and branch
    /// all-1 / all-3 / (x1 = 1, x2 = 3) for ordered pairs of X'.
    std::optional<std::optional<Assignment>> biclique_step(const Problem& p) {
        const int n = static_cast<int>(p.xs.size() + p.ys.size());
        int t = 1;
        while (t * t * t < n)
            ++t;
        std::vector<Vertex> verts = p.xs;
        verts.insert(verts.end(), p.ys.begin(), p.ys.end());
        std::sort(verts.begin(), verts.end());
        Graph live = G.induced(verts);
        std::optional<Biclique> bc;
        try {
            SearchBudget b(cfg.biclique_node_budget);
            bc = find_biclique(live, t, &b);
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
        if (!bc)
            return std::nullopt;
        ++stats.biclique_steps;
        std::vector<Vertex> xprime;
        for (Vertex i : bc->left)
            xprime.push_back(verts[i]);
        if (!std::binary_search(p.xs.begin(), p.xs.end(), xprime.front())) {
            xprime.clear();
            for (Vertex i : bc->right)
                xprime.push_back(verts[i]);
        }
        for (Vertex c : {low, high}) {
            std::vector<std::pair<Vertex, Vertex>> fixed;
            for (Vertex x : xprime)
                fixed.emplace_back(x, c);
            if (auto r = with_fixed(p, fixed))
                return r;
        }
        for (Vertex x1 : xprime)
            for (Vertex x2 : xprime) {
                if (x1 == x2)
                    continue;
                if (auto r = with_fixed(p, {{x1, low}, {x2, high}}))
                    return r;
            }
        return std::optional<Assignment>{};
    }

    /// Sparse case: guess colours of S-vertices of X and, for S-vertices of Y,
    /// which side supplies each remaining required colour.
    std::optional<std::optional<Assignment>> separator_step(const Problem& p,
                                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                                             double ln) {
        std::vector<Vertex> verts = p.xs;
        verts.insert(verts.end(), p.ys.begin(), p.ys.end());
        std::sort(verts.begin(), verts.end());
        const int n = static_cast<int>(verts.size());
        std::map<Vertex, int> local;
        for (int i = 0; i < n; ++i)
            local[verts[i]] = i;
        std::vector<std::pair<Vertex, Vertex>> les;
        for (auto [x, y] : edges)
            les.emplace_back(local[x], local[y]);
        Graph live(n, les);
        const int max_size = std::min(
            n, static_cast<int>(std::ceil(cfg.separator_constant * std::cbrt(static_cast<double>(n) * n) *
                                          std::sqrt(std::max(ln, 1.0)))));
        auto usable = [&](const std::optional<Separation>& s) {
            return s && static_cast<int>(s->S.size()) <= max_size && static_cast<int>(s->S.size()) < n;
        };
        std::optional<Separation> sep = heuristic_separator(live, cfg.beta);
        if (!usable(sep)) {
            SearchBudget b(cfg.separator_node_budget);
            try {
                sep = find_balanced_separator(live, max_size, cfg.beta, &b);
            } catch (const BudgetExceeded&) {
                sep.reset();
            }
        }
        if (!usable(sep))
            return std::nullopt;
        ++stats.separator_steps;
        std::vector<int> where(G.vertex_count(), 0);
        for (int i : sep->V1)
            where[verts[i]] = 1;
        for (int i : sep->V2)
            where[verts[i]] = 2;
        std::vector<Vertex> sx, sy;
        for (int i : sep->S) {
            Vertex v = verts[i];
            where[v] = 3;
            (p.sigma.count(v) ? sy : sx).push_back(v);
        }
        std::map<Vertex, Vertex> colour;
        std::map<std::vector<Mask>, std::optional<Assignment>> memo[2];

        auto side_problem = [&](int side, const std::map<Vertex, Mask>& sy_sigma) {
            Problem q;
            for (Vertex x : p.xs)
                if (where[x] == side)
                    q.xs.push_back(x);
            for (Vertex y : p.ys)
                if (where[y] == side) {
                    Mask s = p.sigma.at(y);
                    for (Vertex x : G.neighbors(y))
                        if (auto it = colour.find(x); it != colour.end())
                            s &= ~bit(it->second);
                    q.ys.push_back(y);
                    q.sigma[y] = s;
                }
            for (auto [y, s] : sy_sigma) {
                q.ys.push_back(y);
                q.sigma[y] = s;
            }
            std::sort(q.ys.begin(), q.ys.end());
            return q;
        };

        std::map<Vertex, Mask> part[2];
        auto solve_sides = [&]() -> std::optional<Assignment> {
            Assignment out;
            for (int side = 0; side < 2; ++side) {
                std::vector<Mask> key;
                for (Vertex x : sx)
                    key.push_back(bit(colour.at(x)));
                for (Vertex y : sy)
                    key.push_back(part[side].at(y));
                auto it = memo[side].find(key);
                if (it == memo[side].end())
                    it = memo[side].emplace(key, solve(side_problem(side + 1, part[side]))).first;
                else
                    ++stats.memo_hits;
                if (!it->second)
                    return std::nullopt;
                out.insert(out.end(), it->second->begin(), it->second->end());
            }
            for (auto [x, c] : colour)
                out.emplace_back(x, c);
            return out;
        };

        auto split = [&](auto&& self, std::size_t i) -> std::optional<Assignment> {
            if (i == sy.size())
                return solve_sides();
            const Vertex y = sy[i];
            Mask rest = p.sigma.at(y);
            for (Vertex x : G.neighbors(y))
                if (auto it = colour.find(x); it != colour.end())
                    rest &= ~bit(it->second);
            // sigma_1 runs over subsets of rest by size then colex; sigma_2 is the remainder
            std::vector<Vertex> elems;
            for (Mask m = rest; m; m &= m - 1)
                elems.push_back(lowest(m));
            std::optional<Assignment> found;
            for_each_subset_by_size(elems, [&](const std::vector<Vertex>& chosen) {
                Mask s1 = 0;
                for (Vertex c : chosen)
                    s1 |= bit(c);
                part[0][y] = s1;
                part[1][y] = rest & ~s1;
                found = self(self, i + 1);
                return !found;
            });
            part[0].erase(y);
            part[1].erase(y);
            return found;
        };

        auto guess = [&](auto&& self, std::size_t i) -> std::optional<Assignment> {
            tick();
            if (i == sx.size())
                return split(split, 0);
            for (Vertex c : {low, high}) {
                colour[sx[i]] = c;
                if (auto r = self(self, i + 1))
                    return r;
            }
            colour.erase(sx[i]);
            return std::nullopt;
        };
        return guess(guess, 0);
    }

    std::optional<Assignment> enumerate(const Problem& p) {
        ++stats.enumerated;
        const int k = static_cast<int>(p.xs.size());
        std::map<Vertex, int> index;
        for (int i = 0; i < k; ++i)
            index[p.xs[i]] = i;
        std::vector<std::vector<int>> nbrs;
        for (Vertex y : p.ys) {
            nbrs.emplace_back();
            for (Vertex x : G.neighbors(y))
                if (auto it = index.find(x); it != index.end())
                    nbrs.back().push_back(it->second);
        }
        std::vector<Vertex> col(k, low);
        auto ok = [&]() {
            for (std::size_t j = 0; j < p.ys.size(); ++j) {
                Mask seen = 0;
                for (int i : nbrs[j])
                    seen |= bit(col[i]);
                if (p.sigma.at(p.ys[j]) & ~seen)
                    return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int i) -> bool {
            tick();
            if (i == k)
                return ok();
            for (Vertex c : {low, high}) {
                col[i] = c;
                if (self(self, i + 1))
                    return true;
            }
            return false;
        };
        if (!rec(rec, 0))
            return std::nullopt;
        Assignment out;
        for (int i = 0; i < k; ++i)
            out.emplace_back(p.xs[i], col[i]);
        return out;
    }

    void tick() {
        if (cfg.budget)
            cfg.budget->tick("locally surjective solver");
    }

    const Graph& G;
    const SurjectiveConfig& cfg;
    SurjectiveStats& stats;
};

/// Solves one orientation on a component: `xs` coloured {1,3}, `ys` coloured 2, every y sees both.
inline std::optional<Homomorphism> oriented(const Graph& G, const std::vector<Vertex>& xs,
                                            const std::vector<Vertex>& ys, const SurjectiveConfig& cfg,
                                            SurjectiveStats& stats) {
    Solver solver(G, cfg, stats);
    Problem p;
    p.xs = xs;
    p.ys = ys;
    for (Vertex y : ys)
        p.sigma[y] = both;
    auto r = solver.solve(std::move(p));
    if (!r)
        return std::nullopt;
    Homomorphism h(G.vertex_count(), -1);
    for (auto [x, c] : *r)
        h[x] = c;
    for (Vertex y : ys)
        h[y] = mid;
    return h;
}

struct Classes {
    std::vector<Vertex> first;  // class of the component's lowest vertex
    std::vector<Vertex> second;
};

inline std::optional<std::vector<Classes>> bipartite_components(const Graph& G) {
    if (G.has_loops() || (G.vertex_count() > 0 && G.min_degree() == 0))
        return std::nullopt;
    auto side = G.bipartition();
    if (!side)
        return std::nullopt;
    std::vector<Classes> out;
    for (const auto& comp : G.components()) {
        Classes c;
        for (Vertex v : comp)
            ((*side)[v] == (*side)[comp.front()] ? c.first : c.second).push_back(v);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace p3_detail

/// Locally surjective homomorphism to the path 1-2-3, if one exists.
///
/// No answer for graphs with isolated vertices or odd cycles. Each component is
/// solved on its own, first with the class of its lowest vertex coloured {1,3}.
/// Dense pieces branch on a K_{t,t} (t = ceil(n^(1/3))); sparse pieces recurse
/// on balanced separators.
inline std::optional<Homomorphism> solve_lshom_p3(const Graph& G, const SurjectiveConfig& cfg = {},
                                                  SurjectiveStats* stats = nullptr) {
    SurjectiveStats local;
    SurjectiveStats& st = stats ? *stats : local;
    auto comps = p3_detail::bipartite_components(G);
    if (!comps)
        return std::nullopt;
    Homomorphism h(G.vertex_count(), -1);
    for (const auto& c : *comps) {
        auto part = p3_detail::oriented(G, c.first, c.second, cfg, st);
        if (!part)
            part = p3_detail::oriented(G, c.second, c.first, cfg, st);
        if (!part)
            return std::nullopt;
        for (Vertex v : c.first)
            h[v] = (*part)[v];
        for (Vertex v : c.second)
            h[v] = (*part)[v];
    }
    return h;
}

/// Locally surjective homomorphism to the 4-cycle 1-2-3-4, if one exists.
///
/// Per component, both orientations of the P3 problem must succeed: with h1
/// colouring X by {1,3} and h2 colouring Y by {1,3}, the answer is h1 on X and
/// h2 + 1 on Y.
inline std::optional<Homomorphism> solve_lshom_c4(const Graph& G, const SurjectiveConfig& cfg = {},
                                                  SurjectiveStats* stats = nullptr) {
    SurjectiveStats local;
    SurjectiveStats& st = stats ? *stats : local;
    auto comps = p3_detail::bipartite_components(G);
    if (!comps)
        return std::nullopt;
    Homomorphism h(G.vertex_count(), -1);
    for (const auto& c : *comps) {
        auto h1 = p3_detail::oriented(G, c.first, c.second, cfg, st);
        if (!h1)
            return std::nullopt;
        auto h2 = p3_detail::oriented(G, c.second, c.first, cfg, st);
        if (!h2)
            return std::nullopt;
        for (Vertex v : c.first)
            h[v] = (*h1)[v];
        for (Vertex v : c.second)
            h[v] = (*h2)[v] + 1;
    }
    return h;
}

} // namespace homlab
